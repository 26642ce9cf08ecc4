#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace qbundle {

using Complex = std::complex<double>;

/// Tensor-product quadrature grid on the 3-sphere in Hopf coordinates
/// (eta, xi1, xi2) with a = cos(eta) e^{i xi1}, c = sin(eta) e^{i xi2}.
/// Gauss-Legendre rings in eta against the measure sin(eta)cos(eta) d eta,
/// uniform angles with trapezoidal weights, plus one zero-weight ring
/// placed exactly on the equator eta = pi/4 so the hemisphere masks meet
/// there. A separate one-dimensional equator ring at phi = xi1 - xi2
/// carries the transition-function samples.
class S3Grid {
public:
    struct Params {
        int n_eta = 48;
        int n_xi1 = 48;
        int n_xi2 = 48;
        int fiber_samples = 32;
        int equator_samples = 1024;
    };

    static std::shared_ptr<const S3Grid> make(const Params& params);

    const Params& params() const { return params_; }
    int ring_count() const { return static_cast<int>(eta_.size()); }
    int equator_ring() const { return ring_count() - 1; }
    int node_count() const { return ring_count() * params_.n_xi1 * params_.n_xi2; }
    int fiber_samples() const { return params_.fiber_samples; }

    double eta(int ring) const { return eta_.at(ring); }
    double xi1(int i) const;
    double xi2(int j) const;
    int node_index(int ring, int i, int j) const {
        return (ring * params_.n_xi1 + i) * params_.n_xi2 + j;
    }

    /// Coordinates of the node at fiber angle zero.
    Complex base_a(int node) const { return a_.at(node); }
    Complex base_c(int node) const { return c_.at(node); }

    /// Quadrature weight; the appended equator ring carries zero weight.
    double quad_weight(int node) const { return w_.at(node); }

    double theta(int k) const;  ///< fiber angle 2 pi k / K

    int equator_samples() const { return params_.equator_samples; }
    double phi(int m) const;
    Complex equator_a(int m) const { return eq_a_.at(m); }
    Complex equator_c(int m) const { return eq_c_.at(m); }

    std::string describe() const;

private:
    explicit S3Grid(const Params& params);

    Params params_;
    std::vector<double> eta_;      ///< per ring, equator ring last
    std::vector<double> eta_w_;    ///< per-ring eta quadrature weight
    std::vector<Complex> a_, c_;   ///< per node
    std::vector<double> w_;        ///< per node
    std::vector<Complex> eq_a_, eq_c_;
};

using GridPtr = std::shared_ptr<const S3Grid>;

/// Nodes on [-1,1] and weights of the n-point Gauss-Legendre rule.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace qbundle
