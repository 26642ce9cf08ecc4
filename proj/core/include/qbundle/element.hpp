#pragma once

#include <string>

#include "qbundle/presentation.hpp"

namespace qbundle {

/// Element of a presented *-algebra, stored as its canonical normal form.
/// Invariants: every word is irreducible, no coefficient is zero, and all
/// operands of an arithmetic operation share one presentation.
class Element {
public:
    Element() = default;  ///< invalid placeholder; usable only for reassignment

    static Element zero(PresPtr p);
    static Element unit(PresPtr p);
    static Element generator(PresPtr p, GenId g);
    static Element generator(PresPtr p, std::string_view name);
    static Element from_word(PresPtr p, Word w);
    static Element from_terms(PresPtr p, const TermList& terms);

    const PresPtr& presentation() const { return pres_; }
    const NormalTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QLaurent coeff(const Word& w) const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Element& rhs);
    Element& operator*=(const QLaurent& scalar);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator*(const QLaurent& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const QLaurent& s) { return a *= s; }

    bool operator==(const Element& rhs) const;
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }

    /// Adjoint: conjugate coefficients, reverse words, flip letters.
    Element star() const;

    /// Image under the coefficient ring map q -> q0, in a presentation of the
    /// same shape whose rules carry specialized coefficients.
    Element specialized(const PresPtr& target) const;

    std::string to_string() const;

private:
    Element(PresPtr p, NormalTerms t) : pres_(std::move(p)), terms_(std::move(t)) {}
    void require_same(const Element& rhs) const;

    PresPtr pres_;
    NormalTerms terms_;
};

}  // namespace qbundle
