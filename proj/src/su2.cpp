#include "holoquant/su2.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace holoquant::su2 {

namespace {

constexpr double kTol = 1e-12;

void check_two_l(int two_l) {
  if (two_l < 0 || two_l > kMaxTwoL) throw InvalidArgument("representation label out of range");
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

GroupElement::GroupElement(const Matrix2& m, GroupTag tag) : m_(m), tag_(tag) {
  const double scale = std::max(1.0, m.cwiseAbs2().sum());
  if (std::abs(m.determinant() - 1.0) > kTol * scale) throw InvalidArgument("group element must have determinant 1");
  if (tag == GroupTag::SU2) {
    if (std::abs(m(0, 1) + std::conj(m(1, 0))) > kTol || std::abs(m(1, 1) - std::conj(m(0, 0))) > kTol ||
        std::abs(std::norm(m(0, 0)) + std::norm(m(1, 0)) - 1.0) > kTol)
      throw InvalidArgument("matrix is not in SU(2)");
  }
}

GroupElement GroupElement::identity(GroupTag tag) { return {Matrix2::Identity(), tag}; }

GroupElement GroupElement::from_su2(Complex alpha, Complex beta) {
  Matrix2 m;
  m << alpha, -std::conj(beta), beta, std::conj(alpha);
  return {m, GroupTag::SU2};
}

GroupElement GroupElement::from_euler(double a, double b, double c) {
  // exp(-i a s3/2) exp(-i b s2/2) exp(-i c s3/2)
  const Complex ea = std::polar(1.0, -a / 2.0), ec = std::polar(1.0, -c / 2.0);
  const double cb = std::cos(b / 2.0), sb = std::sin(b / 2.0);
  Matrix2 m;
  m << ea * cb * ec, -ea * sb * std::conj(ec), std::conj(ea) * sb * ec, std::conj(ea) * cb * std::conj(ec);
  return {m, GroupTag::SU2};
}

GroupElement GroupElement::exp_h(double a) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::exp(a);
  m(1, 1) = std::exp(-a);
  return {m, a == 0.0 ? GroupTag::SU2 : GroupTag::SL2C};
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  const GroupTag t = tag_ == GroupTag::SU2 && o.tag_ == GroupTag::SU2 ? GroupTag::SU2 : GroupTag::SL2C;
  return {m_ * o.m_, t};
}

GroupElement GroupElement::inverse() const {
  Matrix2 m;
  m << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
  return {m, tag_};
}

AlgebraElement::AlgebraElement(const Matrix2& m) : m_(m) {
  if (std::abs(m.trace()) > 1e-14 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw InvalidArgument("algebra element must be trace-free");
}

bool AlgebraElement::is_su2(double tol) const { return (m_.adjoint() + m_).cwiseAbs().maxCoeff() <= tol; }

Matrix2 exp_i(const AlgebraElement& y) {
  // iY is Hermitian for Y in su(2)
  Eigen::SelfAdjointEigenSolver<Matrix2> es(Complex(0, 1) * y.matrix());
  const Eigen::Vector2d ev = es.eigenvalues();
  Matrix2 d = Matrix2::Zero();
  d(0, 0) = std::exp(ev(0));
  d(1, 1) = std::exp(ev(1));
  return es.eigenvectors() * d * es.eigenvectors().adjoint();
}

Polar polar_decompose(const GroupElement& g) {
  const Matrix2& m = g.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix2> es(m.adjoint() * m);
  const Eigen::Vector2d lam = es.eigenvalues();
  const Matrix2& v = es.eigenvectors();
  Matrix2 pinv = Matrix2::Zero(), logp = Matrix2::Zero();
  const double l0 = 0.5 * std::log(lam(0)), l1 = 0.5 * std::log(lam(1));
  // det p = 1: make the logarithm exactly trace-free
  const double mean = 0.5 * (l0 + l1);
  pinv(0, 0) = std::exp(-l0);
  pinv(1, 1) = std::exp(-l1);
  logp(0, 0) = l0 - mean;
  logp(1, 1) = l1 - mean;
  Matrix2 x = m * (v * pinv * v.adjoint());
  // re-symmetrize to the exact SU(2) shape
  const Complex alpha = 0.5 * (x(0, 0) + std::conj(x(1, 1)));
  const Complex beta = 0.5 * (x(1, 0) - std::conj(x(0, 1)));
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  const Matrix2 iy = v * logp * v.adjoint();
  Matrix2 y = Complex(0, -1) * iy;
  y = 0.5 * (y - y.adjoint().eval());
  y(1, 1) = -y(0, 0);
  return {GroupElement::from_su2(alpha / n, beta / n), AlgebraElement(y), std::max(std::abs(l0), std::abs(l1))};
}

CMatrix rep_matrix(int two_l, const GroupElement& g) {
  check_two_l(two_l);
  const int n = two_l;
  const Matrix2& m = g.matrix();
  const Complex g11 = m(0, 0), g21 = m(1, 0), g12 = m(0, 1), g22 = m(1, 1);
  // pi(g) v1^(n-k) v2^k = (g11 v1 + g21 v2)^(n-k) (g12 v1 + g22 v2)^k
  auto powers = [n](Complex z) {
    std::vector<Complex> p(n + 1);
    p[0] = 1.0;
    for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * z;
    return p;
  };
  const auto p11 = powers(g11), p21 = powers(g21), p12 = powers(g12), p22 = powers(g22);
  std::vector<double> lf(n + 1);
  for (int i = 0; i <= n; ++i) lf[i] = log_factorial(i);
  auto binom = [&](int a, int b) { return std::exp(lf[a] - lf[b] - lf[a - b]); };
  CMatrix out = CMatrix::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int r = 0; r <= n - k; ++r) {
      const Complex first = binom(n - k, r) * p11[n - k - r] * p21[r];
      for (int s = 0; s <= k; ++s) {
        const int j = r + s;
        const double norm = std::exp(0.5 * (lf[n - j] + lf[j] - lf[n - k] - lf[k]));
        out(j, k) += first * binom(k, s) * p12[k - s] * p22[s] * norm;
      }
    }
  }
  return out;
}

Complex character(int two_l, const GroupElement& g) {
  check_two_l(two_l);
  const Complex tr = g.trace();
  Complex um = 0.0, u = 1.0;
  for (int k = 0; k < two_l; ++k) {
    const Complex un = tr * u - um;
    um = u;
    u = un;
  }
  return u;
}

double character_angle(int two_l, double theta) {
  if (two_l < 0) throw InvalidArgument("representation label out of range");
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-8) {
    // limit: (2l+1) cos((2l+1) theta) / cos(theta)
    return (two_l + 1) * std::cos((two_l + 1) * theta) / std::cos(theta);
  }
  return std::sin((two_l + 1) * theta) / s;
}

double heat_tail_bound(double t, double a, int two_l_cutoff) {
  double s = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int n = two_l_cutoff + 1;; ++n) {
    const double l = n / 2.0;
    const double term = std::exp(2.0 * std::log(n + 1.0) - t * l * (l + 1.0) / 2.0 + n * a);
    s += term;
    if (!std::isfinite(s)) return s;
    if (term < prev && term < 1e-18 * std::max(s, 1e-300)) break;
    if (n > two_l_cutoff + 200000) break;
    prev = term;
  }
  return s;
}

HeatKernelValue heat_kernel(double t, const GroupElement& g, int two_l_cutoff, double tol, int max_two_l) {
  if (!(t > 0.0)) throw InvalidArgument("heat kernel time must be positive");
  const double a = g.tag() == GroupTag::SU2 ? 0.0 : polar_decompose(g).a;
  int cutoff = two_l_cutoff;
  if (cutoff < 0) {
    cutoff = 0;
    while (heat_tail_bound(t, a, cutoff) >= tol) {
      ++cutoff;
      if (cutoff > max_two_l) {
        int need = cutoff;
        while (need < 1000000 && heat_tail_bound(t, a, need) >= tol) need = need * 2;
        throw ConvergenceFailure("heat kernel series needs 2L = " + std::to_string(need) + " to reach tolerance",
                                 need);
      }
    }
  }
  const Complex tr = g.trace();
  Complex um = 0.0, u = 1.0, s = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    const double l = n / 2.0;
    s += (n + 1.0) * std::exp(-t * l * (l + 1.0) / 2.0) * u;
    const Complex un = tr * u - um;
    um = u;
    u = un;
  }
  return {s, cutoff, heat_tail_bound(t, a, cutoff)};
}

PeterWeylCoeffs::PeterWeylCoeffs(int two_l_max) {
  check_two_l(two_l_max);
  for (int n = 0; n <= two_l_max; ++n) blocks_.push_back(CMatrix::Zero(n + 1, n + 1));
}

PeterWeylCoeffs PeterWeylCoeffs::character(int two_l) {
  PeterWeylCoeffs c(two_l);
  c.blocks_[two_l] = CMatrix::Identity(two_l + 1, two_l + 1) / std::sqrt(two_l + 1.0);
  return c;
}

double PeterWeylCoeffs::norm_sq() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return s;
}

Complex PeterWeylCoeffs::operator()(const GroupElement& g) const {
  Complex s = 0.0;
  for (int n = 0; n <= two_l_max(); ++n) {
    const CMatrix& b = blocks_[n];
    if (b.cwiseAbs().maxCoeff() == 0.0) continue;
    s += std::sqrt(n + 1.0) * (b.array() * rep_matrix(n, g).array()).sum();
  }
  return s;
}

PeterWeylCoeffs PeterWeylCoeffs::heat_flow(double hbar) const {
  PeterWeylCoeffs out = *this;
  for (int n = 0; n <= two_l_max(); ++n) {
    const double l = n / 2.0;
    out.blocks_[n] *= std::exp(-hbar * l * (l + 1.0) / 2.0);
  }
  return out;
}

Complex transform_group(const PeterWeylCoeffs& f, const GroupElement& g, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  return f.heat_flow(hbar)(g);
}

EulerOrders euler_orders_for_degree(int two_d) {
  const int d = std::max(two_d, 0);
  return {d + 1, d / 2 + 1, 2 * d + 1};
}

QuadratureRule euler_quadrature(EulerOrders o) {
  if (o.alpha < 1 || o.beta < 1 || o.gamma < 1) throw InvalidArgument("euler_quadrature: orders must be >= 1");
  const GaussNodes gb = gauss_legendre_nodes(o.beta, -1.0, 1.0);
  std::vector<Complex> nodes;
  std::vector<double> weights;
  nodes.reserve(4u * o.alpha * o.beta * o.gamma);
  for (int i = 0; i < o.alpha; ++i)
    for (int j = 0; j < o.beta; ++j)
      for (int k = 0; k < o.gamma; ++k) {
        const GroupElement g =
            GroupElement::from_euler(2.0 * pi * i / o.alpha, std::acos(gb.x[j]), 4.0 * pi * k / o.gamma);
        const Matrix2& m = g.matrix();
        nodes.insert(nodes.end(), {m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
        weights.push_back(gb.w[j] / (2.0 * o.alpha * o.gamma));
      }
  const int degree = std::min({o.alpha - 1, (o.gamma - 1) / 2, 2 * o.beta - 1});
  return QuadratureRule(4, std::move(nodes), std::move(weights), degree, 1.0);
}

GroupElement group_node(const QuadratureRule& rule, std::size_t i) {
  if (rule.dim() != 4) throw InvalidArgument("not a group rule");
  const auto n = rule.node(i);
  Matrix2 m;
  m << n[0], n[1], n[2], n[3];
  return {m, GroupTag::SU2};
}

Complex transform_group_direct(const PeterWeylCoeffs& f, const GroupElement& g, double hbar,
                               const QuadratureRule& rule, int heat_cutoff) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const GroupElement x = group_node(rule, i);
    s += rule.weight(i) * heat_kernel(hbar, g * x.inverse(), heat_cutoff).value * f(x);
  }
  return s;
}

PeterWeylCoeffs project_peter_weyl(const std::function<Complex(const GroupElement&)>& f, int two_l_max,
                                   const QuadratureRule& rule) {
  PeterWeylCoeffs c(two_l_max);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const GroupElement x = group_node(rule, i);
    const Complex v = rule.weight(i) * f(x);
    for (int n = 0; n <= two_l_max; ++n) c.block(n) += std::sqrt(n + 1.0) * v * rep_matrix(n, x).conjugate();
  }
  return c;
}

GroupElement random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  double q[4], n = 0.0;
  do {
    n = 0.0;
    for (double& v : q) {
      v = nd(rng);
      n += v * v;
    }
  } while (n < 1e-12);
  n = std::sqrt(n);
  return GroupElement::from_su2(Complex(q[0] / n, q[1] / n), Complex(q[2] / n, q[3] / n));
}

GroupElement random_sl2c(std::mt19937_64& rng, double a_max) {
  std::uniform_real_distribution<double> ud(0.0, a_max);
  const GroupElement x1 = random_su2(rng), x2 = random_su2(rng);
  return x1 * GroupElement::exp_h(ud(rng)) * x2;
}

}  // namespace holoquant::su2
