#include "qbundle/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qbundle {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    // Newton iteration on P_n from the asymptotic root estimate; the rule is
    // symmetric, so only the upper half is solved.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

S3Grid::S3Grid(const Params& params) : params_(params) {
    if (params.n_eta < 1 || params.n_xi1 < 1 || params.n_xi2 < 1)
        throw std::invalid_argument("S3Grid: grid dimensions must be positive");
    if (params.fiber_samples < 1)
        throw std::invalid_argument("S3Grid: fiber_samples must be positive");
    if (params.equator_samples < 1)
        throw std::invalid_argument("S3Grid: equator_samples must be positive");

    // Substitute t = cos(2 eta): the measure sin(eta)cos(eta) d eta becomes
    // dt / 4 on [-1,1], so Gauss-Legendre in t integrates polynomials in
    // cos(2 eta) exactly.
    std::vector<double> t, tw;
    gauss_legendre(params.n_eta, t, tw);
    eta_.reserve(params.n_eta + 1);
    eta_w_.reserve(params.n_eta + 1);
    for (int i = params.n_eta - 1; i >= 0; --i) {
        eta_.push_back(0.5 * std::acos(t[i]));
        eta_w_.push_back(0.25 * tw[i]);
    }
    eta_.push_back(kPi / 4.0);
    eta_w_.push_back(0.0);

    const int rings = ring_count();
    const double w1 = 2.0 * kPi / params.n_xi1;
    const double w2 = 2.0 * kPi / params.n_xi2;
    a_.reserve(node_count());
    c_.reserve(node_count());
    w_.reserve(node_count());
    for (int r = 0; r < rings; ++r) {
        const double ce = std::cos(eta_[r]);
        const double se = std::sin(eta_[r]);
        for (int i = 0; i < params.n_xi1; ++i) {
            const Complex e1 = std::polar(1.0, xi1(i));
            for (int j = 0; j < params.n_xi2; ++j) {
                a_.push_back(ce * e1);
                c_.push_back(se * std::polar(1.0, xi2(j)));
                w_.push_back(eta_w_[r] * w1 * w2);
            }
        }
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    eq_a_.reserve(params.equator_samples);
    eq_c_.reserve(params.equator_samples);
    for (int m = 0; m < params.equator_samples; ++m) {
        eq_a_.push_back(inv_sqrt2 * std::polar(1.0, phi(m)));
        eq_c_.push_back(Complex(inv_sqrt2, 0.0));
    }
}

std::shared_ptr<const S3Grid> S3Grid::make(const Params& params) {
    return std::shared_ptr<const S3Grid>(new S3Grid(params));
}

double S3Grid::xi1(int i) const { return 2.0 * kPi * i / params_.n_xi1; }

double S3Grid::xi2(int j) const { return 2.0 * kPi * j / params_.n_xi2; }

double S3Grid::theta(int k) const { return 2.0 * kPi * k / params_.fiber_samples; }

double S3Grid::phi(int m) const { return 2.0 * kPi * m / params_.equator_samples; }

std::string S3Grid::describe() const {
    std::ostringstream os;
    os << params_.n_eta << "x" << params_.n_xi1 << "x" << params_.n_xi2
       << " grid, " << params_.fiber_samples << " fiber samples, "
       << params_.equator_samples << " equator samples";
    return os.str();
}

}  // namespace qbundle
