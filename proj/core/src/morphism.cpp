#include "qbundle/morphism.hpp"

#include <stdexcept>

namespace qbundle {

Morphism::Morphism(std::string name, PresPtr source, PresPtr target,
                   std::vector<Element> images)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->generator_count())
        throw std::logic_error(name_ + ": need one image per source generator");
    for (const Element& e : images_)
        if (e.presentation() != target_)
            throw std::logic_error(name_ + ": image lives in the wrong algebra");
}

Element Morphism::apply_word(const Word& w) const {
    Element out = Element::unit(target_);
    for (GenId g : w)
        out *= images_[g];
    return out;
}

Element Morphism::apply(const Element& x) const {
    if (x.presentation() != source_)
        throw std::logic_error(name_ + ": argument lives in the wrong algebra");
    Element out = Element::zero(target_);
    for (const auto& [w, c] : x.terms())
        out += apply_word(w) * c;
    return out;
}

std::vector<std::string> Morphism::check_relations() const {
    std::vector<std::string> bad;
    for (const auto& rule : source_->rules()) {
        Element lhs = apply_word(rule.lhs);
        Element rhs = Element::zero(target_);
        for (const auto& [w, c] : rule.rhs)
            rhs += apply_word(w) * c;
        if (lhs != rhs)
            bad.push_back(name_ + ": image of " + source_->word_to_string(rule.lhs) +
                          " gives " + lhs.to_string() + " but its reduct gives " +
                          rhs.to_string());
    }
    return bad;
}

bool Morphism::is_star_map() const {
    for (GenId g = 0; g < source_->generator_count(); ++g)
        if (images_[g].star() != images_[source_->star_of(g)])
            return false;
    return true;
}

}  // namespace qbundle
