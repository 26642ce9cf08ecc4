#pragma once

#include "qbundle/sampled.hpp"

namespace qbundle {

/// Coordinate function a or c sampled over the grid, weight +1.
SampledFunction coordinate_a(const GridPtr& grid);
SampledFunction coordinate_c(const GridPtr& grid);

/// Normalizer omega = sqrt(2 / (1 + | |a|^2 - |c|^2 |)), weight 0.
/// Makes |omega a| = 1 on hemisphere A and |omega c| = 1 on hemisphere C.
SampledFunction omega(const GridPtr& grid);

/// Unit-modulus cleaving section on the hemisphere of the mask:
/// (omega a)^n on A, (omega c)^n on C, with z^{-|n|} = conj(z)^{|n|}.
/// Weight n, restricted to the mask.
SampledFunction cleave(int n, const MaskPtr& mask);

struct TrivializedSection {
    SampledFunction disk;  ///< weight-0 factor over the hemisphere
    int weight;
};

/// Splits a fiber-homogeneous function into (disk factor, weight) over the
/// hemisphere of the mask: disk = restrict(x) * cleave(-weight).
/// Throws std::invalid_argument when x carries no integer weight tag.
TrivializedSection trivialization_iso(const SampledFunction& x, const MaskPtr& mask);

}  // namespace qbundle
