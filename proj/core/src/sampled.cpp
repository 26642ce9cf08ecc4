#include "qbundle/sampled.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qbundle {

namespace {

constexpr double kBand = 1e-9;

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
    if (a.grid() != b.grid())
        throw std::logic_error("sampled functions live on different grids");
}

}  // namespace

HemisphereMask::HemisphereMask(GridPtr grid, Kind kind, std::string name,
                               std::vector<std::uint8_t> keep)
    : grid_(std::move(grid)), kind_(kind), name_(std::move(name)), keep_(std::move(keep)) {}

std::shared_ptr<const HemisphereMask> HemisphereMask::hemisphere(const GridPtr& grid, Kind kind) {
    if (kind == Kind::Custom)
        throw std::invalid_argument("hemisphere mask kind must be A or C");
    std::vector<std::uint8_t> keep(grid->node_count(), 0);
    for (int p = 0; p < grid->node_count(); ++p) {
        const double aa = std::norm(grid->base_a(p));
        const bool in = (kind == Kind::A) ? (aa >= 0.5 - kBand) : (aa <= 0.5 + kBand);
        keep[p] = in ? 1 : 0;
    }
    return std::shared_ptr<const HemisphereMask>(new HemisphereMask(
        grid, kind, kind == Kind::A ? "A" : "C", std::move(keep)));
}

std::shared_ptr<const HemisphereMask> HemisphereMask::intersect(
    const std::shared_ptr<const HemisphereMask>& lhs,
    const std::shared_ptr<const HemisphereMask>& rhs) {
    if (!lhs) return rhs;
    if (!rhs || lhs == rhs) return lhs;
    if (lhs->grid_ != rhs->grid_)
        throw std::logic_error("masks live on different grids");
    std::vector<std::uint8_t> keep(lhs->keep_.size());
    for (size_t p = 0; p < keep.size(); ++p) keep[p] = lhs->keep_[p] & rhs->keep_[p];
    return std::shared_ptr<const HemisphereMask>(new HemisphereMask(
        lhs->grid_, Kind::Custom, lhs->name_ + "&" + rhs->name_, std::move(keep)));
}

int HemisphereMask::size() const {
    int n = 0;
    for (auto k : keep_) n += k;
    return n;
}

SampledFunction::SampledFunction(GridPtr grid, MaskPtr mask, std::optional<int> weight)
    : grid_(std::move(grid)), mask_(std::move(mask)), weight_(weight),
      K_(grid_->fiber_samples()),
      v_(static_cast<size_t>(grid_->node_count()) * K_, Complex(0.0, 0.0)) {
    if (mask_ && mask_->grid() != grid_)
        throw std::logic_error("mask lives on a different grid");
}

SampledFunction SampledFunction::constant(const GridPtr& grid, Complex value) {
    SampledFunction f(grid, nullptr, 0);
    for (auto& x : f.v_) x = value;
    return f;
}

SampledFunction SampledFunction::sample(const GridPtr& grid,
                                        const std::function<Complex(Complex, Complex)>& value,
                                        std::optional<int> weight) {
    SampledFunction f(grid, nullptr, weight);
    const int K = grid->fiber_samples();
    for (int p = 0; p < grid->node_count(); ++p) {
        const Complex a = grid->base_a(p);
        const Complex c = grid->base_c(p);
        for (int k = 0; k < K; ++k) {
            const Complex u = std::polar(1.0, grid->theta(k));
            f.at(p, k) = value(a * u, c * u);
        }
    }
    return f;
}

void SampledFunction::merge_with(const SampledFunction& rhs) {
    require_same_grid(*this, rhs);
    mask_ = HemisphereMask::intersect(mask_, rhs.mask_);
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& rhs) {
    merge_with(rhs);
    weight_ = (weight_ == rhs.weight_) ? weight_ : std::nullopt;
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += rhs.v_[i];
    return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& rhs) {
    merge_with(rhs);
    weight_ = (weight_ == rhs.weight_) ? weight_ : std::nullopt;
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= rhs.v_[i];
    return *this;
}

SampledFunction& SampledFunction::operator*=(const SampledFunction& rhs) {
    merge_with(rhs);
    weight_ = combine_weights(weight_, rhs.weight_);
    for (size_t i = 0; i < v_.size(); ++i) v_[i] *= rhs.v_[i];
    return *this;
}

SampledFunction& SampledFunction::operator*=(Complex scalar) {
    for (auto& x : v_) x *= scalar;
    return *this;
}

SampledFunction SampledFunction::conjugated() const {
    SampledFunction out(grid_, mask_, weight_ ? std::optional<int>(-*weight_) : std::nullopt);
    for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = std::conj(v_[i]);
    return out;
}

SampledFunction SampledFunction::restricted(const MaskPtr& mask) const {
    SampledFunction out = *this;
    out.mask_ = HemisphereMask::intersect(mask_, mask);
    return out;
}

double SampledFunction::max_abs() const {
    double m = 0.0;
    for (int p = 0; p < grid_->node_count(); ++p) {
        if (!defined(p)) continue;
        for (int k = 0; k < K_; ++k) m = std::max(m, std::abs(at(p, k)));
    }
    return m;
}

double SampledFunction::min_abs() const {
    double m = std::numeric_limits<double>::infinity();
    for (int p = 0; p < grid_->node_count(); ++p) {
        if (!defined(p)) continue;
        for (int k = 0; k < K_; ++k) m = std::min(m, std::abs(at(p, k)));
    }
    return m;
}

double SampledFunction::fiber_residual(int weight) const {
    double m = 0.0;
    for (int p = 0; p < grid_->node_count(); ++p) {
        if (!defined(p)) continue;
        const Complex base = at(p, 0);
        for (int k = 1; k < K_; ++k) {
            const Complex expect = std::polar(1.0, weight * grid_->theta(k)) * base;
            m = std::max(m, std::abs(at(p, k) - expect));
        }
    }
    return m;
}

Complex SampledFunction::integrate() const {
    // Kahan compensation keeps the rounding error flat in the node count.
    Complex s(0.0, 0.0);
    Complex carry(0.0, 0.0);
    for (int p = 0; p < grid_->node_count(); ++p) {
        if (!defined(p)) continue;
        const Complex term = grid_->quad_weight(p) * at(p, 0) - carry;
        const Complex next = s + term;
        carry = (next - s) - term;
        s = next;
    }
    return s;
}

SampledFunction fourier_weight_project(const SampledFunction& f, int n) {
    const GridPtr& grid = f.grid();
    const int K = grid->fiber_samples();
    if (K <= 2 * std::abs(n))
        throw std::invalid_argument(
            "fourier_weight_project: fiber sampling too coarse for weight " + std::to_string(n) +
            " (aliasing)");
    SampledFunction out(grid, f.mask(), n);
    std::vector<Complex> phase(K);
    for (int k = 0; k < K; ++k) phase[k] = std::polar(1.0 / K, -n * grid->theta(k));
    for (int p = 0; p < grid->node_count(); ++p) {
        if (!f.defined(p)) continue;
        Complex coeff(0.0, 0.0);
        for (int k = 0; k < K; ++k) coeff += f.at(p, k) * phase[k];
        for (int j = 0; j < K; ++j)
            out.at(p, j) = coeff * std::polar(1.0, n * grid->theta(j));
    }
    return out;
}

}  // namespace qbundle
