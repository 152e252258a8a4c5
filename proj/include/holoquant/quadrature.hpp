#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "holoquant/core.hpp"

namespace holoquant {

// Nodes are points of C^dim stored contiguously; real rules use zero
// imaginary parts. Weights already include the target density.
class QuadratureRule {
 public:
  QuadratureRule(std::size_t dim, std::vector<Complex> nodes, std::vector<double> weights,
                 int exact_degree, double total_mass);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const Complex> node(std::size_t i) const { return {nodes_.data() + i * dim_, dim_}; }
  Complex point(std::size_t i) const { return nodes_[i * dim_]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Complex>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  int exact_degree() const { return exact_degree_; }
  double total_mass() const { return total_mass_; }

  template <class F>
  Complex integrate(F&& f) const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += weights_[i] * Complex(f(node(i)));
    return s;
  }

  // sum of weights times precomputed values
  Complex sum(std::span<const Complex> values) const;

 private:
  std::size_t dim_;
  std::vector<Complex> nodes_;
  std::vector<double> weights_;
  int exact_degree_;
  double total_mass_;
};

enum class GaussianWeight { Mu, Nu };

struct NuWindow {
  double half_width_factor = 12.0;  // W = factor * sqrt(hbar)
  int real_order = 0;               // 0 picks a default from W
};

// Nodes and weights of the Gauss rule for a symmetric tridiagonal Jacobi
// matrix (diag, offdiag) and zeroth moment mu0.
struct GaussNodes {
  std::vector<double> x, w;
};
GaussNodes golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                        double mu0);

GaussNodes gauss_legendre_nodes(int n, double lo, double hi);
// weight (1-x)^alpha (1+x)^beta on [-1, 1]
GaussNodes gauss_jacobi_nodes(int n, double alpha, double beta);

// against rho_hbar(x) = (2 pi hbar)^(-1/2) exp(-x^2 / 2 hbar)
QuadratureRule gauss_hermite(int n, PlanckScale scale);
QuadratureRule gauss_legendre(int n, double lo, double hi);
// mu_t or nu_hbar on C^dim, dim in {1, 2}
QuadratureRule complex_gaussian(int n, PlanckScale scale, GaussianWeight weight, int dim = 1,
                                NuWindow window = {});
// (1-|z|^2)^a dA on the unit disk
QuadratureRule disk_rule(int n_radial, int n_angular, double a);
// d theta on the unit circle
QuadratureRule circle_rule(int n);
// class functions on SU(2), nodes are the angles theta
QuadratureRule su2_class_rule(int n);

}  // namespace holoquant
