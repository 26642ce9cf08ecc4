#include "qbundle/qlaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qbundle {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

bool QLaurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

Rational QLaurent::coeff(long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void QLaurent::set(long k, const Rational& c) {
    if (c == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
    for (const auto& [k, c] : other.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
    for (const auto& [k, c] : other.coeffs_) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            long k = ka + kb;
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(k, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    r.coeffs_.erase(it);
            }
        }
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& other) {
    *this = *this * other;
    return *this;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [k, c] : coeffs_)
        r.coeffs_.emplace(k, -c);
    return r;
}

QLaurent QLaurent::shifted(long k) const {
    QLaurent r;
    for (const auto& [e, c] : coeffs_)
        r.coeffs_.emplace(e + k, c);
    return r;
}

Rational QLaurent::evaluate(const Rational& q0) const {
    if (q0 == 0)
        throw std::domain_error("specialization requires q0 != 0");
    Rational acc(0);
    for (const auto& [k, c] : coeffs_)
        acc += c * rational_pow(q0, k);
    return acc;
}

std::string QLaurent::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit_coeff = (mag == 1);
        if (k == 0) {
            os << rational_to_string(mag);
        } else {
            if (!unit_coeff)
                os << rational_to_string(mag) << "*";
            os << "q";
            if (k != 1)
                os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace qbundle
