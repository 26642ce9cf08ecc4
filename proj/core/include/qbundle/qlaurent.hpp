#pragma once

#include <map>
#include <string>

#include "qbundle/rational.hpp"

namespace qbundle {

/// Laurent polynomial in the deformation parameter q with exact rational
/// coefficients. This is the coefficient ring of all symbolic computation:
/// q is treated as a formal invertible variable, and numeric runs
/// specialize it to a nonzero rational.
///
/// Invariant: no stored coefficient is zero; the zero polynomial is the
/// empty map.
class QLaurent {
public:
    QLaurent() = default;
    QLaurent(long value) { set(0, Rational(value)); }  // NOLINT(google-explicit-constructor)
    QLaurent(const Rational& value) { set(0, value); }  // NOLINT(google-explicit-constructor)

    /// c * q^k
    static QLaurent monomial(const Rational& c, long k) {
        QLaurent r;
        r.set(k, c);
        return r;
    }
    static QLaurent q(long k = 1) { return monomial(Rational(1), k); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// Coefficient of q^k (zero if absent).
    Rational coeff(long k) const;

    const std::map<long, Rational>& terms() const { return coeffs_; }

    QLaurent& operator+=(const QLaurent& other);
    QLaurent& operator-=(const QLaurent& other);
    QLaurent& operator*=(const QLaurent& other);
    QLaurent operator-() const;

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

    bool operator==(const QLaurent& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const QLaurent& other) const { return !(*this == other); }
    bool operator<(const QLaurent& other) const { return coeffs_ < other.coeffs_; }

    /// Multiply by q^k (exact division by q^-k; Laurent monomials are units).
    QLaurent shifted(long k) const;

    /// q is real, rational coefficients are self-conjugate, so conjugation
    /// is the identity. Kept explicit so star() reads correctly.
    const QLaurent& conjugated() const { return *this; }

    /// Ring homomorphism q -> q0. Rejects q0 = 0 (q must stay invertible).
    Rational evaluate(const Rational& q0) const;

    /// Replace every coefficient's exponent structure by its value at q0,
    /// i.e. the image under the specialization homomorphism, re-embedded
    /// as a constant.
    QLaurent specialized(const Rational& q0) const { return QLaurent(evaluate(q0)); }

    /// Rendering like "1 - q^2", "q^-1", "3/2". Deterministic (ascending
    /// exponent order).
    std::string to_string() const;

private:
    void set(long k, const Rational& c);

    std::map<long, Rational> coeffs_;
};

}  // namespace qbundle
