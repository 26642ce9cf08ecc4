#include "qbundle/element.hpp"

#include <stdexcept>

namespace qbundle {

Element Element::zero(PresPtr p) {
    return Element(std::move(p), NormalTerms{});
}

Element Element::unit(PresPtr p) {
    NormalTerms t;
    t.emplace(Word{}, QLaurent(1));
    return Element(std::move(p), std::move(t));
}

Element Element::generator(PresPtr p, GenId g) {
    if (g < 0 || g >= p->generator_count())
        throw std::out_of_range(p->name() + ": no generator with id " + std::to_string(g));
    return from_word(std::move(p), Word{g});
}

Element Element::generator(PresPtr p, std::string_view name) {
    GenId g = p->find_generator(name);
    if (g < 0)
        throw std::out_of_range(p->name() + ": no generator named " + std::string(name));
    return from_word(std::move(p), Word{g});
}

Element Element::from_word(PresPtr p, Word w) {
    TermList t;
    t.emplace_back(std::move(w), QLaurent(1));
    return from_terms(std::move(p), t);
}

Element Element::from_terms(PresPtr p, const TermList& terms) {
    NormalTerms nf = p->reduce(terms);
    return Element(std::move(p), std::move(nf));
}

QLaurent Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QLaurent() : it->second;
}

void Element::require_same(const Element& rhs) const {
    if (!pres_ || !rhs.pres_)
        throw std::logic_error("operation on an uninitialized element");
    if (pres_ != rhs.pres_)
        throw std::logic_error("mixed presentations: " + pres_->name() + " vs " +
                               rhs.pres_->name());
}

Element& Element::operator+=(const Element& rhs) {
    require_same(rhs);
    for (const auto& [w, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh && (it->second += c).is_zero())
            terms_.erase(it);
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same(rhs);
    for (const auto& [w, c] : rhs.terms_) {
        auto [it, fresh] = terms_.try_emplace(w, -c);
        if (!fresh && (it->second -= c).is_zero())
            terms_.erase(it);
    }
    return *this;
}

Element& Element::operator*=(const Element& rhs) {
    require_same(rhs);
    TermList products;
    products.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : rhs.terms_)
            products.emplace_back(concat(wa, wb), ca * cb);
    terms_ = pres_->reduce(products);
    return *this;
}

Element& Element::operator*=(const QLaurent& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= scalar;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [w, c] : out.terms_)
        c = -c;
    return out;
}

bool Element::operator==(const Element& rhs) const {
    return pres_ == rhs.pres_ && terms_ == rhs.terms_;
}

Element Element::star() const {
    TermList flipped;
    flipped.reserve(terms_.size());
    for (const auto& [w, c] : terms_)
        flipped.emplace_back(pres_->star_word(w), c.conjugated());
    return from_terms(pres_, flipped);
}

Element Element::specialized(const PresPtr& target) const {
    if (!target->q_value())
        throw std::logic_error(target->name() + ": specialization target must fix q");
    if (target->generator_count() != pres_->generator_count())
        throw std::logic_error("specialization target has a different generator set");
    const Rational& q0 = *target->q_value();
    TermList mapped;
    mapped.reserve(terms_.size());
    for (const auto& [w, c] : terms_)
        mapped.emplace_back(w, QLaurent(c.evaluate(q0)));
    return from_terms(target, mapped);
}

std::string Element::to_string() const {
    if (!pres_)
        return "<uninitialized>";
    return pres_->terms_to_string(terms_);
}

}  // namespace qbundle
