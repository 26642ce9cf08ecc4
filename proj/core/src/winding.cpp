#include "qbundle/winding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qbundle {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

int winding_number(const CircleFunction& f, double min_modulus) {
    const int M = f.size();
    if (M < 3) throw std::domain_error("winding_number: need at least 3 samples");
    for (int m = 0; m < M; ++m) {
        if (std::abs(f.values[m]) < min_modulus)
            throw std::domain_error("winding_number: sample " + std::to_string(m) +
                                    " too close to zero, degree undefined");
    }
    double total = 0.0;
    for (int m = 0; m < M; ++m) {
        const Complex ratio = f.values[(m + 1) % M] / f.values[m];
        const double step = std::arg(ratio);
        if (std::abs(step) >= kPi - 1e-9)
            throw std::domain_error("winding_number: argument step of " + std::to_string(step) +
                                    " at sample " + std::to_string(m) +
                                    " is ambiguous, sampling too coarse");
        total += step;
    }
    const double turns = total / (2.0 * kPi);
    const int rounded = static_cast<int>(std::lround(turns));
    if (std::abs(turns - rounded) > 0.25)
        throw std::domain_error("winding_number: accumulated argument " + std::to_string(turns) +
                                " turns is not near an integer");
    return rounded;
}

CircleFunction transition_function(const GridPtr& grid, int M) {
    const int E = grid->equator_samples();
    if (M < 3 || M > E || E % M != 0)
        throw std::invalid_argument("transition_function: sample count " + std::to_string(M) +
                                    " must divide the equator sample count " + std::to_string(E));
    const int stride = E / M;
    CircleFunction out;
    out.values.reserve(M);
    for (int m = 0; m < M; ++m) {
        const Complex a = grid->equator_a(m * stride);
        const Complex c = grid->equator_c(m * stride);
        const double d = std::abs(std::norm(a) - std::norm(c));
        const double w = std::sqrt(2.0 / (1.0 + d));
        out.values.push_back((w * a) * std::conj(w * c));
    }
    return out;
}

}  // namespace qbundle
