#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbundle {

/// Index into a Presentation's generator table.
using GenId = int;

/// Noncommutative monomial: a finite sequence of generator symbols.
/// The empty word is the unit; degree is the length.
using Word = std::vector<GenId>;

inline int degree(const Word& w) { return static_cast<int>(w.size()); }

Word concat(const Word& a, const Word& b);

/// First position where `pattern` occurs as a contiguous subword, or -1.
int find_subword(const Word& w, const Word& pattern);

/// Degree-lexicographic order: shorter words first, ties broken
/// lexicographically by generator id. Generator ids are assigned in
/// declaration order, so this is deg-lex over the declared symbol order.
/// Every rewrite rule must strictly decrease it.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

}  // namespace qbundle
