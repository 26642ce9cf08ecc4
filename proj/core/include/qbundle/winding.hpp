#pragma once

#include <complex>
#include <vector>

#include "qbundle/grid.hpp"

namespace qbundle {

/// Samples of a map S^1 -> C* at the uniform angles 2 pi m / M.
struct CircleFunction {
    std::vector<Complex> values;
    int size() const { return static_cast<int>(values.size()); }
};

/// Degree of the sampled loop via accumulated principal-branch argument
/// increments. Throws std::domain_error when a sample is too close to zero
/// (|f| < min_modulus) or when a step turns by pi or more, since the branch
/// choice is then ambiguous and the count unreliable.
int winding_number(const CircleFunction& f, double min_modulus = 1e-9);

/// Clutching function of the circle bundle restricted to the equator,
/// sampled at M uniform angles: (omega a) (omega c)^{-1} with the unit
/// inverse taken as the conjugate. M must divide the grid's equator sample
/// count.
CircleFunction transition_function(const GridPtr& grid, int M);

}  // namespace qbundle
