#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbundle/tensor.hpp"

namespace qbundle {

/// Word of the circle algebra representing u^n (adjoint powers for n < 0).
Word circle_word(const PresPtr& u1, int n);

/// Right coaction x -> x (x) u^wt(x) (or its left mirror) as a tensor with
/// an explicit circle leg.
TensorElement coact(const Element& x, CoactionSide side, const PresPtr& u1);

/// Normal words of weight zero and degree <= max_degree.
std::vector<Word> coinvariant_basis(const PresPtr& p, CoactionSide side, int max_degree);

/// Membership in the cotensor product over the circle: the right coaction
/// on leg 0 must match the left coaction on leg 1. Both tests are run as
/// literal three-leg tensor comparisons. On failure, witness (if given)
/// receives the first offending pure tensor.
bool cotensor_check(const TensorElement& t, const PresPtr& u1,
                    std::string* witness = nullptr);

/// can(p (x) q) = p q0 (x) q1 for the right circle coaction on leg 1.
TensorElement canonical_map(const TensorElement& t, const PresPtr& u1);

/// Recursive strong connection lifts of circle powers: tensors l(u^n) in
/// P (x) P with can(l(u^n)) = 1 (x) u^n, built by splicing the generator
/// lifts l(u) and l(u^-1) onto the outside legs.
TensorElement strong_connection(const PresPtr& p, int n);

}  // namespace qbundle
