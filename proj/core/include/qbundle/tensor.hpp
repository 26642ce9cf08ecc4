#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbundle/element.hpp"

namespace qbundle {

/// Element of a tensor product of presented algebras, one leg per factor.
/// Terms are keyed by tuples of normal words; coefficients live in the
/// shared Laurent ring. Invariants mirror Element: normal words, no zeros.
class TensorElement {
public:
    using Key = std::vector<Word>;

    struct KeyLess {
        bool operator()(const Key& x, const Key& y) const {
            if (x.size() != y.size())
                return x.size() < y.size();
            DegLexLess less;
            for (size_t i = 0; i < x.size(); ++i) {
                if (less(x[i], y[i]))
                    return true;
                if (less(y[i], x[i]))
                    return false;
            }
            return false;
        }
    };
    using Terms = std::map<Key, QLaurent, KeyLess>;

    explicit TensorElement(std::vector<PresPtr> legs);
    static TensorElement unit(std::vector<PresPtr> legs);

    /// Tensor product of elements, one per leg.
    static TensorElement pure(const std::vector<Element>& factors);

    int leg_count() const { return static_cast<int>(legs_.size()); }
    const std::vector<PresPtr>& legs() const { return legs_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Add c * (words[0] (x) ... (x) words[k-1]), reducing each leg.
    void add(const Key& words, const QLaurent& c);

    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    TensorElement& operator*=(const QLaurent& scalar);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const QLaurent& s, TensorElement a) { return a *= s; }

    /// Legwise product: (a1 (x) a2) * (b1 (x) b2) = a1 b1 (x) a2 b2.
    /// No braiding; factors are multiplied within their own leg.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    bool operator==(const TensorElement& rhs) const;
    bool operator!=(const TensorElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    void require_same(const TensorElement& rhs) const;

    std::vector<PresPtr> legs_;
    Terms terms_;
};

/// Apply f to leg `slot` of every term and splice the image's legs in its
/// place. f must map words of that leg's algebra to tensors over a fixed
/// leg list (possibly empty, giving a scalar contraction of that slot).
TensorElement map_leg(const TensorElement& t, int slot,
                      const std::function<TensorElement(const Word&)>& f);

/// x viewed as a one-leg tensor.
TensorElement tensor_of(const Element& x);

/// Multiply all legs together, left to right. Requires every leg to live
/// in the same algebra.
Element contract(const TensorElement& t);

}  // namespace qbundle
