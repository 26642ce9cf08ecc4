#include "qbundle/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qbundle {

TensorElement::TensorElement(std::vector<PresPtr> legs) : legs_(std::move(legs)) {
    for (const auto& p : legs_)
        if (!p)
            throw std::logic_error("tensor leg without a presentation");
}

TensorElement TensorElement::unit(std::vector<PresPtr> legs) {
    TensorElement t(std::move(legs));
    t.terms_.emplace(Key(t.legs_.size()), QLaurent(1));
    return t;
}

TensorElement TensorElement::pure(const std::vector<Element>& factors) {
    std::vector<PresPtr> legs;
    legs.reserve(factors.size());
    for (const auto& f : factors)
        legs.push_back(f.presentation());
    TensorElement out(std::move(legs));

    Key key(factors.size());
    QLaurent coeff(1);
    std::function<void(size_t)> expand = [&](size_t i) {
        if (i == factors.size()) {
            auto [it, fresh] = out.terms_.try_emplace(key, coeff);
            if (!fresh && (it->second += coeff).is_zero())
                out.terms_.erase(it);
            return;
        }
        for (const auto& [w, c] : factors[i].terms()) {
            key[i] = w;
            QLaurent saved = coeff;
            coeff *= c;
            expand(i + 1);
            coeff = std::move(saved);
        }
    };
    expand(0);
    return out;
}

void TensorElement::add(const Key& words, const QLaurent& c) {
    if (words.size() != legs_.size())
        throw std::logic_error("tensor term arity mismatch");
    if (c.is_zero())
        return;

    std::vector<NormalTerms> reduced(legs_.size());
    for (size_t i = 0; i < legs_.size(); ++i) {
        reduced[i] = legs_[i]->reduce({{words[i], QLaurent(1)}});
        if (reduced[i].empty())
            return;
    }

    Key key(legs_.size());
    QLaurent coeff = c;
    std::function<void(size_t)> expand = [&](size_t i) {
        if (i == legs_.size()) {
            auto [it, fresh] = terms_.try_emplace(key, coeff);
            if (!fresh && (it->second += coeff).is_zero())
                terms_.erase(it);
            return;
        }
        for (const auto& [w, cw] : reduced[i]) {
            key[i] = w;
            QLaurent saved = coeff;
            coeff *= cw;
            expand(i + 1);
            coeff = std::move(saved);
        }
    };
    expand(0);
}

void TensorElement::require_same(const TensorElement& rhs) const {
    if (legs_ != rhs.legs_)
        throw std::logic_error("tensor operands over different leg algebras");
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
    require_same(rhs);
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh && (it->second += c).is_zero())
            terms_.erase(it);
    }
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
    require_same(rhs);
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(k, -c);
        if (!fresh && (it->second -= c).is_zero())
            terms_.erase(it);
    }
    return *this;
}

TensorElement& TensorElement::operator*=(const QLaurent& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_)
        c *= scalar;
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.require_same(b);
    TensorElement out(a.legs_);
    TensorElement::Key key(a.legs_.size());
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            for (size_t i = 0; i < key.size(); ++i)
                key[i] = concat(ka[i], kb[i]);
            out.add(key, ca * cb);
        }
    }
    return out;
}

bool TensorElement::operator==(const TensorElement& rhs) const {
    return legs_ == rhs.legs_ && terms_ == rhs.terms_;
}

std::string TensorElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool wrap = cs.find(' ') != std::string::npos || cs.find('-') != std::string::npos;
        os << (wrap ? "(" + cs + ")" : cs);
        for (size_t i = 0; i < k.size(); ++i)
            os << (i == 0 ? " * " : " (x) ") << legs_[i]->word_to_string(k[i]);
    }
    return os.str();
}

TensorElement map_leg(const TensorElement& t, int slot,
                      const std::function<TensorElement(const Word&)>& f) {
    if (slot < 0 || slot >= t.leg_count())
        throw std::out_of_range("map_leg: no such leg");

    TensorElement probe = f(Word{});
    std::vector<PresPtr> legs;
    for (int i = 0; i < slot; ++i)
        legs.push_back(t.legs()[i]);
    for (const auto& p : probe.legs())
        legs.push_back(p);
    for (int i = slot + 1; i < t.leg_count(); ++i)
        legs.push_back(t.legs()[i]);

    TensorElement out(std::move(legs));
    for (const auto& [k, c] : t.terms()) {
        TensorElement img = f(k[slot]);
        for (const auto& [ik, ic] : img.terms()) {
            TensorElement::Key key;
            key.reserve(out.leg_count());
            key.insert(key.end(), k.begin(), k.begin() + slot);
            key.insert(key.end(), ik.begin(), ik.end());
            key.insert(key.end(), k.begin() + slot + 1, k.end());
            out.add(key, c * ic);
        }
    }
    return out;
}

TensorElement tensor_of(const Element& x) {
    TensorElement out({x.presentation()});
    for (const auto& [w, c] : x.terms())
        out.add({w}, c);
    return out;
}

Element contract(const TensorElement& t) {
    if (t.leg_count() == 0)
        throw std::logic_error("contract: need at least one leg");
    const PresPtr& p = t.legs()[0];
    for (const auto& leg : t.legs())
        if (leg != p)
            throw std::logic_error("contract: legs live in different algebras");

    TermList flat;
    for (const auto& [k, c] : t.terms()) {
        Word w;
        for (const auto& part : k)
            w.insert(w.end(), part.begin(), part.end());
        flat.emplace_back(std::move(w), c);
    }
    return Element::from_terms(p, flat);
}

}  // namespace qbundle
