#include "qbundle/pwfun.hpp"

#include <cmath>
#include <stdexcept>

namespace qbundle {

SampledFunction coordinate_a(const GridPtr& grid) {
    return SampledFunction::sample(grid, [](Complex a, Complex) { return a; }, 1);
}

SampledFunction coordinate_c(const GridPtr& grid) {
    return SampledFunction::sample(grid, [](Complex, Complex c) { return c; }, 1);
}

SampledFunction omega(const GridPtr& grid) {
    return SampledFunction::sample(
        grid,
        [](Complex a, Complex c) {
            const double d = std::abs(std::norm(a) - std::norm(c));
            return Complex(std::sqrt(2.0 / (1.0 + d)), 0.0);
        },
        0);
}

SampledFunction cleave(int n, const MaskPtr& mask) {
    if (!mask) throw std::invalid_argument("cleave: mask required");
    const GridPtr& grid = mask->grid();
    SampledFunction base = omega(grid);
    switch (mask->kind()) {
        case HemisphereMask::Kind::A: base *= coordinate_a(grid); break;
        case HemisphereMask::Kind::C: base *= coordinate_c(grid); break;
        default:
            throw std::invalid_argument("cleave: mask must be a hemisphere mask");
    }
    base = base.restricted(mask);
    SampledFunction out = SampledFunction::constant(grid, 1.0).restricted(mask);
    const SampledFunction factor = (n >= 0) ? base : base.conjugated();
    for (int i = 0; i < std::abs(n); ++i) out *= factor;
    return out;
}

TrivializedSection trivialization_iso(const SampledFunction& x, const MaskPtr& mask) {
    if (!x.weight())
        throw std::invalid_argument(
            "trivialization_iso: function carries no fiber weight (mixed weights)");
    const int n = *x.weight();
    SampledFunction disk = x.restricted(mask) * cleave(-n, mask);
    return TrivializedSection{std::move(disk), n};
}

}  // namespace qbundle
