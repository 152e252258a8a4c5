#include "holoquant/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "holoquant/simd.hpp"

namespace holoquant {

QuadratureRule::QuadratureRule(std::size_t dim, std::vector<Complex> nodes,
                               std::vector<double> weights, int exact_degree, double total_mass)
    : dim_(dim),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      exact_degree_(exact_degree),
      total_mass_(total_mass) {
  if (dim_ == 0 || nodes_.size() != weights_.size() * dim_)
    throw InvalidArgument("quadrature: node/weight size mismatch");
  for (double w : weights_)
    if (!(w > 0.0)) throw InvalidArgument("quadrature: weights must be positive");
}

Complex QuadratureRule::sum(std::span<const Complex> values) const {
  if (values.size() != size()) throw InvalidArgument("quadrature: value count mismatch");
  return simd::active().weighted_sum(weights_.data(), values.data(), size());
}

GaussNodes golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                        double mu0) {
  const int n = static_cast<int>(diag.size());
  GaussNodes out;
  if (n == 1) {
    out.x = {diag[0]};
    out.w = {mu0};
    return out;
  }
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
  Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(offdiag.data(), n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  out.x.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  // Christoffel weights 1 / sum_k p_k(x)^2 with orthonormal p_k
  out.w.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = out.x[i];
    double pm = 0.0, p = 1.0 / std::sqrt(mu0), s = p * p;
    for (int k = 0; k + 1 < n; ++k) {
      const double pn = ((x - diag[k]) * p - (k > 0 ? offdiag[k - 1] * pm : 0.0)) / offdiag[k];
      pm = p;
      p = pn;
      s += p * p;
    }
    out.w[i] = 1.0 / s;
  }
  return out;
}

GaussNodes gauss_legendre_nodes(int n, double lo, double hi) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be >= 1");
  std::vector<double> d(n, 0.0), e(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) e[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  GaussNodes g = golub_welsch(d, e, 2.0);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  for (int i = 0; i < n; ++i) {
    g.x[i] = mid + half * g.x[i];
    g.w[i] *= half;
  }
  return g;
}

GaussNodes gauss_jacobi_nodes(int n, double alpha, double beta) {
  if (n < 1) throw InvalidArgument("gauss_jacobi: n must be >= 1");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw InvalidArgument("gauss_jacobi: exponents must exceed -1");
  const double ab = alpha + beta;
  std::vector<double> d(n), e(std::max(n - 1, 0));
  d[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    d[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double b;
    if (k == 1)
      b = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    else
      b = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    e[k - 1] = std::sqrt(b);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  return golub_welsch(d, e, mu0);
}

namespace {

GaussNodes hermite_nodes(int n, double hbar) {
  if (n < 1) throw InvalidArgument("gauss_hermite: n must be >= 1");
  std::vector<double> d(n, 0.0), e(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(double(k));
  GaussNodes g = golub_welsch(d, e, 1.0);
  const double s = std::sqrt(hbar);
  // symmetrize: exact odd moments
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (g.x[n - 1 - i] - g.x[i]);
    const double w = 0.5 * (g.w[n - 1 - i] + g.w[i]);
    g.x[i] = -x;
    g.x[n - 1 - i] = x;
    g.w[i] = g.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) g.x[n / 2] = 0.0;
  const double total = std::accumulate(g.w.begin(), g.w.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    g.x[i] *= s;
    g.w[i] /= total;
  }
  return g;
}

QuadratureRule from_real(const GaussNodes& g, int degree, double mass) {
  std::vector<Complex> nodes(g.x.begin(), g.x.end());
  return QuadratureRule(1, std::move(nodes), g.w, degree, mass);
}

QuadratureRule tensor(const QuadratureRule& a, const QuadratureRule& b) {
  std::vector<Complex> nodes;
  std::vector<double> weights;
  nodes.reserve(a.size() * b.size() * 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      nodes.push_back(a.point(i));
      nodes.push_back(b.point(j));
      weights.push_back(a.weight(i) * b.weight(j));
    }
  return QuadratureRule(2, std::move(nodes), std::move(weights),
                        std::min(a.exact_degree(), b.exact_degree()),
                        a.total_mass() * b.total_mass());
}

}  // namespace

QuadratureRule gauss_hermite(int n, PlanckScale scale) {
  return from_real(hermite_nodes(n, scale.value()), 2 * n - 1, 1.0);
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  return from_real(gauss_legendre_nodes(n, lo, hi), 2 * n - 1, hi - lo);
}

QuadratureRule complex_gaussian(int n, PlanckScale scale, GaussianWeight weight, int dim,
                                NuWindow window) {
  if (n < 1) throw InvalidArgument("complex_gaussian: n must be >= 1");
  if (dim != 1 && dim != 2) throw InvalidArgument("complex_gaussian: dim must be 1 or 2");
  const double h = scale.value();
  std::vector<Complex> nodes;
  std::vector<double> weights;
  int degree = 0;
  double mass = 1.0;
  if (weight == GaussianWeight::Mu) {
    // (pi t)^-1 exp(-|z|^2/t) = rho_{t/2}(x) rho_{t/2}(y)
    const GaussNodes g = hermite_nodes(n, h / 2.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        nodes.emplace_back(g.x[i], g.x[j]);
        weights.push_back(g.w[i] * g.w[j]);
      }
    degree = 2 * n - 1;
  } else if (weight == GaussianWeight::Nu) {
    // (pi hbar)^-1/2 exp(-y^2/hbar) dy times Lebesgue dx on [-W, W]
    if (!(window.half_width_factor > 0.0)) throw InvalidArgument("complex_gaussian: window must be positive");
    const double W = window.half_width_factor * std::sqrt(h);
    const int m = window.real_order > 0 ? window.real_order
                                        : std::max(64, static_cast<int>(std::ceil(10.0 * window.half_width_factor)));
    const GaussNodes gy = hermite_nodes(n, h / 2.0);
    const GaussNodes gx = gauss_legendre_nodes(m, -W, W);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        nodes.emplace_back(gx.x[i], gy.x[j]);
        weights.push_back(gx.w[i] * gy.w[j]);
      }
    degree = std::min(2 * n - 1, 2 * m - 1);
    mass = 2.0 * W;
  } else {
    throw InvalidArgument("complex_gaussian: unknown weight");
  }
  QuadratureRule one(1, std::move(nodes), std::move(weights), degree, mass);
  return dim == 1 ? one : tensor(one, one);
}

QuadratureRule disk_rule(int n_radial, int n_angular, double a) {
  if (!(a > -1.0)) throw InvalidArgument("disk_rule: a must exceed -1");
  if (n_radial < 1 || n_angular < 1) throw InvalidArgument("disk_rule: orders must be >= 1");
  // s = r^2 in [0,1], dA = (1/2) ds dtheta, weight (1-s)^a; s = (x+1)/2
  const GaussNodes g = gauss_jacobi_nodes(n_radial, a, 0.0);
  const double radial_scale = 0.5 * std::pow(2.0, -a - 1.0);
  const double dtheta = 2.0 * pi / n_angular;
  std::vector<Complex> nodes;
  std::vector<double> weights;
  for (int i = 0; i < n_radial; ++i) {
    const double r = std::sqrt(0.5 * (g.x[i] + 1.0));
    for (int k = 0; k < n_angular; ++k) {
      nodes.push_back(std::polar(r, k * dtheta));
      weights.push_back(dtheta * radial_scale * g.w[i]);
    }
  }
  return QuadratureRule(1, std::move(nodes), std::move(weights),
                        std::min(2 * n_radial - 1, n_angular - 1), pi / (a + 1.0));
}

QuadratureRule circle_rule(int n) {
  if (n < 1) throw InvalidArgument("circle_rule: n must be >= 1");
  std::vector<Complex> nodes;
  std::vector<double> weights(n, 2.0 * pi / n);
  for (int k = 0; k < n; ++k) nodes.push_back(std::polar(1.0, 2.0 * pi * k / n));
  return QuadratureRule(1, std::move(nodes), std::move(weights), n - 1, 2.0 * pi);
}

QuadratureRule su2_class_rule(int n) {
  if (n < 1) throw InvalidArgument("su2_class_rule: n must be >= 1");
  std::vector<Complex> nodes;
  std::vector<double> weights;
  for (int j = 1; j <= n; ++j) {
    const double th = j * pi / (n + 1);
    nodes.emplace_back(th, 0.0);
    weights.push_back(2.0 / (n + 1) * std::sin(th) * std::sin(th));
  }
  return QuadratureRule(1, std::move(nodes), std::move(weights), 2 * n - 1, 1.0);
}

}  // namespace holoquant
