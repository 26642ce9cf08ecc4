#pragma once

#include <vector>

#include "qbundle/tensor.hpp"

namespace qbundle {

/// Coproduct, counit and antipode extended from generators to free words:
/// multiplicatively for the first two, anti-multiplicatively for the
/// antipode. The word is not reduced first, so these are exactly the maps
/// whose descent to the quotient verify_relation_compat certifies.
TensorElement comultiply_word(const PresPtr& p, const Word& w);
QLaurent counit_word(const PresPtr& p, const Word& w);
Element antipode_word(const PresPtr& p, const Word& w);

/// Linear extensions to elements in normal form.
TensorElement comultiply(const Element& x);
QLaurent counit(const Element& x);
Element antipode(const Element& x);

/// Coassociativity, counit and antipode laws, and compatibility of the
/// adjoint with the coproduct and counit, on every normal word of degree
/// <= max_degree. Returns human-readable violations; empty means pass.
std::vector<std::string> verify_hopf_axioms(const PresPtr& p, int max_degree);

/// Descent of the structure maps to the quotient: both sides of every
/// rewrite rule must have equal coproduct, counit and antipode images.
std::vector<std::string> verify_relation_compat(const PresPtr& p);

}  // namespace qbundle
