#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbundle/grid.hpp"

namespace qbundle {

/// Node subset of an S3Grid. The hemisphere masks overlap in a band of
/// width 1e-9 around |a|^2 = 1/2, so the zero-weight equator ring belongs
/// to both.
class HemisphereMask {
public:
    enum class Kind { A, C, Custom };

    static std::shared_ptr<const HemisphereMask> hemisphere(const GridPtr& grid, Kind kind);
    static std::shared_ptr<const HemisphereMask> intersect(
        const std::shared_ptr<const HemisphereMask>& lhs,
        const std::shared_ptr<const HemisphereMask>& rhs);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const GridPtr& grid() const { return grid_; }
    bool contains(int node) const { return keep_[node] != 0; }
    int size() const;

private:
    HemisphereMask(GridPtr grid, Kind kind, std::string name, std::vector<std::uint8_t> keep);

    GridPtr grid_;
    Kind kind_;
    std::string name_;
    std::vector<std::uint8_t> keep_;
};

using MaskPtr = std::shared_ptr<const HemisphereMask>;

/// Function on the grid sampled along whole circle fibers: the value block
/// of node p holds f(p e^{i theta_k}) for the K fiber angles. Fiber
/// rotation is then an exact index shift and weight projection is an exact
/// discrete Fourier sum. A function may be restricted to a mask;
/// out-of-mask values are not meaningful. The weight tag tracks the fiber
/// character: weight n means f(p e^{i theta}) = e^{i n theta} f(p);
/// nullopt marks a mixed (or unknown) weight.
class SampledFunction {
public:
    SampledFunction(GridPtr grid, MaskPtr mask, std::optional<int> weight);

    static SampledFunction constant(const GridPtr& grid, Complex value);
    /// Samples value(a, c) over every node and fiber angle. The declared
    /// weight is trusted; pass nullopt when unsure.
    static SampledFunction sample(const GridPtr& grid,
                                  const std::function<Complex(Complex, Complex)>& value,
                                  std::optional<int> weight);

    const GridPtr& grid() const { return grid_; }
    const MaskPtr& mask() const { return mask_; }
    std::optional<int> weight() const { return weight_; }

    Complex& at(int node, int k) { return v_[static_cast<size_t>(node) * K_ + k]; }
    Complex at(int node, int k) const { return v_[static_cast<size_t>(node) * K_ + k]; }
    bool defined(int node) const { return !mask_ || mask_->contains(node); }

    SampledFunction& operator+=(const SampledFunction& rhs);
    SampledFunction& operator-=(const SampledFunction& rhs);
    SampledFunction& operator*=(const SampledFunction& rhs);
    SampledFunction& operator*=(Complex scalar);
    friend SampledFunction operator+(SampledFunction lhs, const SampledFunction& rhs) {
        return lhs += rhs;
    }
    friend SampledFunction operator-(SampledFunction lhs, const SampledFunction& rhs) {
        return lhs -= rhs;
    }
    friend SampledFunction operator*(SampledFunction lhs, const SampledFunction& rhs) {
        return lhs *= rhs;
    }
    friend SampledFunction operator*(Complex scalar, SampledFunction f) { return f *= scalar; }

    SampledFunction conjugated() const;
    SampledFunction restricted(const MaskPtr& mask) const;

    /// Max modulus over defined nodes and all fiber angles.
    double max_abs() const;
    /// Min modulus over defined nodes and all fiber angles.
    double min_abs() const;
    /// Max deviation from the declared weight-n fiber behaviour
    /// |f(p e^{i theta_k}) - e^{i n theta_k} f(p)| over defined nodes.
    double fiber_residual(int weight) const;
    /// Quadrature integral of the fiber-angle-zero values over defined nodes.
    Complex integrate() const;

private:
    void merge_with(const SampledFunction& rhs);

    GridPtr grid_;
    MaskPtr mask_;
    std::optional<int> weight_;
    int K_;
    std::vector<Complex> v_;
};

/// Fiber-weight projector P_n f(x) = (1/K) sum_k f(x e^{i theta_k}) e^{-i n theta_k}.
/// Exact on sampled weights up to aliasing; requires K > 2|n|.
SampledFunction fourier_weight_project(const SampledFunction& f, int n);

inline std::optional<int> combine_weights(std::optional<int> a, std::optional<int> b) {
    if (a && b) return *a + *b;
    return std::nullopt;
}

}  // namespace qbundle
