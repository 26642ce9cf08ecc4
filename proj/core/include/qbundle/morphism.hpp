#pragma once

#include <string>
#include <vector>

#include "qbundle/element.hpp"

namespace qbundle {

/// Unital algebra map determined by generator images, extended to words
/// multiplicatively and to sums linearly.
class Morphism {
public:
    Morphism(std::string name, PresPtr source, PresPtr target, std::vector<Element> images);

    const std::string& name() const { return name_; }
    const PresPtr& source() const { return source_; }
    const PresPtr& target() const { return target_; }
    const Element& image(GenId g) const { return images_.at(g); }

    Element apply_word(const Word& w) const;
    Element apply(const Element& x) const;

    /// Violated defining relations, as human-readable descriptions. A
    /// well-defined map has none.
    std::vector<std::string> check_relations() const;

    /// Whether the map intertwines the adjoints on generators.
    bool is_star_map() const;

private:
    std::string name_;
    PresPtr source_;
    PresPtr target_;
    std::vector<Element> images_;
};

}  // namespace qbundle
