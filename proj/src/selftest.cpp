#include "holoquant/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "holoquant/fock.hpp"
#include "holoquant/holospace.hpp"
#include "holoquant/quadrature.hpp"
#include "holoquant/quantize.hpp"
#include "holoquant/su2.hpp"
#include "holoquant/transform.hpp"

namespace holoquant {

namespace {

using std::abs;

double rel(double got, double want) { return abs(got - want) / std::max(abs(want), 1e-300); }

std::vector<Complex> random_coeffs(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> nd;
  std::vector<Complex> c(n);
  for (auto& v : c) v = Complex(nd(rng), nd(rng));
  return c;
}

PhaseSymbol random_int_symbol(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_degree);
  PhaseSymbol f(1);
  for (int t = 0; t < 4; ++t) {
    const int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    const int n = split(rng);
    f.add_term({n, d - n}, double(coef(rng)));
  }
  return f;
}

CheckResult quadrature_mass() {
  double worst = 0.0;
  auto check = [&](const QuadratureRule& r) {
    double s = 0.0;
    for (double w : r.weights()) s += w;
    worst = std::max(worst, rel(s, r.total_mass()));
  };
  for (int n = 1; n <= 60; ++n) check(gauss_hermite(n, PlanckScale(0.7)));
  check(complex_gaussian(20, PlanckScale(1.3), GaussianWeight::Mu));
  check(complex_gaussian(8, PlanckScale(0.5), GaussianWeight::Mu, 2));
  check(complex_gaussian(30, PlanckScale(2.0), GaussianWeight::Nu));
  for (double a : {-0.5, 0.0, 1.0, 2.5}) check(disk_rule(10, 20, a));
  check(circle_rule(16));
  check(su2_class_rule(10));
  check(su2::euler_quadrature(su2::euler_orders_for_degree(4)));
  return {worst, 1e-12};
}

CheckResult gauss_hermite_odd() {
  double worst = 0.0;
  for (int n = 1; n <= 40; ++n) {
    const QuadratureRule r = gauss_hermite(n, PlanckScale(1.0));
    double s = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double v = r.weight(i) * std::pow(r.point(i).real(), 2 * n - 1);
      s += v;
      scale += abs(v);
    }
    worst = std::max(worst, abs(s) / std::max(scale, 1e-300));
  }
  return {worst, 1e-14};
}

CheckResult mu_moment_table() {
  const double t = 1.5;
  const QuadratureRule r = complex_gaussian(12, PlanckScale(t), GaussianWeight::Mu);
  double worst = 0.0;
  for (int n = 0; n <= 11; ++n)
    for (int m = 0; m <= 11; ++m) {
      const Complex v = r.integrate([&](auto z) { return std::pow(z[0], n) * std::pow(std::conj(z[0]), m); });
      const double scale = std::exp(0.5 * (std::lgamma(n + 1.0) + std::lgamma(m + 1.0)) + 0.5 * (n + m) * std::log(t));
      const double want = n == m ? std::exp(std::lgamma(n + 1.0) + n * std::log(t)) : 0.0;
      worst = std::max(worst, abs(v - want) / scale);
    }
  return {worst, 1e-10};
}

CheckResult fock_sparsity() {
  const HermiteBasisSpec spec(12, PlanckScale(0.8));
  const auto [a, ad] = ladder(spec);
  const auto [x, p] = position_momentum(spec);
  double bad = 0.0;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      if (j != i + 1) bad += abs(a(i, j));
      if (i != j + 1) bad += abs(ad(i, j));
      if (abs(i - j) != 1) bad += abs(x(i, j)) + abs(p(i, j));
    }
  return {bad, 0.0};
}

CheckResult fock_trivial_ccr() {
  const HermiteBasisSpec spec(16, PlanckScale(1.7));
  const auto [x, p] = position_momentum(spec);
  const double r = std::max(commutator(x, x).entries().cwiseAbs().maxCoeff(),
                            commutator(p, p).entries().cwiseAbs().maxCoeff());
  return {r, 0.0};
}

CheckResult fock_corner() {
  double worst = 0.0;
  for (double h : {0.5, 1.0, 2.0}) {
    const int n = 10;
    const HermiteBasisSpec spec(n, PlanckScale(h));
    const auto [a, ad] = ladder(spec);
    CMatrix c = commutator(a, ad).entries();
    worst = std::max(worst, abs(c(n - 1, n - 1) - h * (1.0 - n)));
    c(n - 1, n - 1) = h;
    worst = std::max(worst, (c - h * CMatrix::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  return {worst, 1e-12};
}

CheckResult fock_self_adjoint() {
  const HermiteBasisSpec spec(20, PlanckScale(0.3));
  const auto [x, p] = position_momentum(spec);
  const double r = std::max((x.entries() - x.entries().adjoint()).cwiseAbs().maxCoeff(),
                            (p.entries() - p.entries().adjoint()).cwiseAbs().maxCoeff());
  return {r, 0.0};
}

CheckResult fock_svn() {
  double worst = 0.0;
  for (double h : {0.5, 1.0, 2.0}) worst = std::max(worst, svn_ladder_identities(HermiteBasisSpec(8, PlanckScale(h))).max_residual());
  return {worst, 1e-12};
}

CheckResult kernel_conjugate_symmetry() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SpaceSpec spaces[] = {SpaceSpec::segal_bargmann(0.9), SpaceSpec::bergman(), SpaceSpec::weighted_bergman(1.5),
                              SpaceSpec::hardy(), SpaceSpec::invariant_gaussian(0.8)};
  double worst = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const SpaceSpec& sp = spaces[i % 5];
    const double r = sp.is_disk() ? 0.7 : 2.0;
    const Complex z(r * u(rng), r * u(rng)), w(r * u(rng), r * u(rng));
    if (sp.is_disk() && (abs(z) >= 0.99 || abs(w) >= 0.99)) continue;
    const Complex k1 = kernel(sp, z, w), k2 = kernel(sp, w, z);
    worst = std::max(worst, abs(k2 - std::conj(k1)) / abs(k1));
  }
  return {worst, 1e-14};
}

CheckResult kernel_idempotence() {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-0.35, 0.35);
  const SpaceSpec sb = SpaceSpec::segal_bargmann(1.0), berg = SpaceSpec::bergman();
  const QuadratureRule mu = complex_gaussian(40, PlanckScale(1.0), GaussianWeight::Mu);
  const QuadratureRule disk = disk_rule(60, 121, 0.0);
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const Complex z(u(rng), u(rng)), v(u(rng), u(rng));
    for (const auto& [sp, rule] : {std::pair{sb, &mu}, std::pair{berg, &disk}}) {
      const Complex got = project(sp, [&](Complex w) { return kernel(sp, w, v); }, z, *rule);
      worst = std::max(worst, abs(got - kernel(sp, z, v)) / abs(kernel(sp, z, v)));
    }
  }
  return {worst, 1e-8};
}

CheckResult hardy_monotone() {
  std::mt19937_64 rng(13);
  const SpaceSpec hardy = SpaceSpec::hardy();
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const HoloFunction f(hardy, 6, random_coeffs(rng, 7));
    double prev = -1.0;
    for (int k = 0; k <= 20; ++k) {
      const double r = k / 20.0;
      const QuadratureRule c = circle_rule(32);
      double s = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) s += c.weight(i) * std::norm(f(r * c.point(i)));
      worst = std::max(worst, prev - s);
      prev = s;
    }
  }
  return {std::max(worst, 0.0), 0.0};
}

CheckResult kernel_tail_decay() {
  const SpaceSpec sb = SpaceSpec::segal_bargmann(1.0);
  const Complex z(1.2, 0.5), w(0.9, -1.1);
  const Complex exact = kernel(sb, z, w);
  const int start = static_cast<int>(std::ceil(abs(z * std::conj(w)))) + 1;
  double worst = 0.0, prev = abs(kernel_from_basis(sb, z, w, start) - exact);
  for (int m = start + 1; m <= 40; ++m) {
    const double e = abs(kernel_from_basis(sb, z, w, m) - exact);
    if (prev > 1e-14 * abs(exact)) worst = std::max(worst, e - prev);
    prev = e;
  }
  return {std::max(worst, 0.0), 1e-15};
}

HoloFunction random_sb(std::mt19937_64& rng, const SpaceSpec& sp, int degree) {
  HoloFunction f(sp, degree, random_coeffs(rng, degree + 1));
  return f * Complex(1.0 / f.norm());
}

CheckResult translate_phase() {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const double t = 1.0;
  const SpaceSpec sp = SpaceSpec::segal_bargmann(t);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    const HoloFunction f = random_sb(rng, sp, 6);
    const HoloFunction lhs = translate(a, translate(b, f, PlanckScale(t)), PlanckScale(t));
    const Complex phase = std::exp(Complex(0.0, -std::imag(a * std::conj(b)) / t));
    const HoloFunction rhs = translate(a + b, f, PlanckScale(t)) * phase;
    worst = std::max(worst, lhs.max_coeff_diff(rhs));
  }
  return {worst, 1e-9};
}

CheckResult exponentiated_ccr() {
  std::mt19937_64 rng(15);
  const double h = 0.8;
  const SpaceSpec sp = SpaceSpec::segal_bargmann(h);
  const PlanckScale s(h);
  double worst = 0.0;
  for (auto [r, q] : {std::pair{0.3, 0.5}, std::pair{-0.7, 0.4}, std::pair{1.0, -0.6}}) {
    const HoloFunction f = random_sb(rng, sp, 5);
    const Complex vr(0.0, -r / std::sqrt(2.0)), ws(-q / std::sqrt(2.0), 0.0);
    const HoloFunction lhs = translate(vr, translate(ws, f, s), s);
    const HoloFunction rhs = translate(ws, translate(vr, f, s), s) * std::exp(Complex(0.0, -r * q / h));
    worst = std::max(worst, lhs.max_coeff_diff(rhs));
  }
  return {worst, 1e-9};
}

WaveFunction random_wave(std::mt19937_64& rng, int degree, PlanckScale s) {
  return WaveFunction(random_coeffs(rng, degree + 1), s).normalized();
}

CheckResult transform_paths() {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const PlanckScale s(0.9);
  const QuadratureRule rule = transform_rule(s);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const WaveFunction psi = random_wave(rng, 20, s);
    const HoloFunction a = transform_A(psi);
    worst = std::max(worst, abs(a.norm_sq() - psi.norm_sq()));
    for (int k = 0; k < 4; ++k) {
      const Complex z(u(rng), u(rng));
      worst = std::max(worst, abs(transform_A_integral(psi, z, rule) - a(z)));
    }
  }
  return {worst, 1e-8};
}

CheckResult cauchy_riemann() {
  std::mt19937_64 rng(17);
  const PlanckScale s(1.0);
  const WaveFunction psi = random_wave(rng, 10, s);
  std::vector<Complex> centers;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) centers.emplace_back(i, j);
  const double h = 0.1;
  const double r = cauchy_riemann_residual([&](Complex z) { return transform_C_closed(psi, z); }, centers, h);
  return {r, 1e-6 * h * h};
}

CheckResult ground_state_unitarity() {
  std::mt19937_64 rng(18);
  const double h = 1.3;
  const PlanckScale s(h);
  const WaveFunction psi = random_wave(rng, 12, s);
  const WaveFunction g = ground_state_transform(psi);
  // psi(x) = (G psi)(sqrt2 x) f_0(x) with f_0 the normalized ground state
  double worst = abs(g.norm_sq() - psi.norm_sq());
  for (double x = -3.0; x <= 3.0; x += 0.25) {
    const double f0 = std::pow(pi * h, -0.25) * std::exp(-x * x / (2.0 * h));
    worst = std::max(worst, abs(g(Complex(std::sqrt(2.0) * x, 0.0)) * f0 - psi(x)));
  }
  const QuadratureRule rule = gauss_hermite(30, s);
  const Complex q = rule.integrate([&](auto y) { return std::norm(g(Complex(y[0].real(), 0.0))); });
  worst = std::max(worst, abs(q.real() - psi.norm_sq()));
  return {worst, 1e-12};
}

CheckResult adjoint_kernel_check() {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const PlanckScale s(0.7);
  const QuadratureRule rule = transform_rule(s);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex z(u(rng), u(rng)), w(u(rng), u(rng));
    const Complex want = std::exp(z * std::conj(w) / s.value());
    worst = std::max(worst, abs(adjoint_kernel(z, w, s, rule) - want) / abs(want));
  }
  return {worst, 1e-10};
}

CheckResult husimi_nonnegative() {
  std::mt19937_64 rng(20);
  const PlanckScale s(1.0);
  const WaveFunction psi = random_wave(rng, 8, s);
  std::vector<PhasePoint> grid;
  for (int i = 0; i < 41; ++i)
    for (int j = 0; j < 41; ++j) grid.push_back({-6.0 + 0.3 * i, -6.0 + 0.3 * j});
  const auto h = husimi(psi, grid);
  const double lo = *std::min_element(h.begin(), h.end());
  return {std::max(0.0, -lo), 0.0};
}

CheckResult poisson_laws() {
  std::mt19937_64 rng(21);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const PhaseSymbol f = random_int_symbol(rng, 4), g = random_int_symbol(rng, 4), k = random_int_symbol(rng, 4);
    worst = std::max(worst, poisson(f, g).max_abs_diff(poisson(g, f) * Complex(-1.0)));
    worst = std::max(worst, poisson(f * Complex(2.0) + g, k).max_abs_diff(poisson(f, k) * Complex(2.0) + poisson(g, k)));
    const PhaseSymbol jac = poisson(f, poisson(g, k)) + poisson(g, poisson(k, f)) + poisson(k, poisson(f, g));
    worst = std::max(worst, jac.max_abs_diff(PhaseSymbol(1)));
    worst = std::max(worst, poisson(f, g * k).max_abs_diff(poisson(f, g) * k + g * poisson(f, k)));
  }
  return {worst, 0.0};
}

CheckResult matrix_brackets() {
  std::mt19937_64 rng(22);
  const PlanckScale s(1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    auto rnd = [&] {
      CMatrix m(8, 8);
      const auto c = random_coeffs(rng, 64);
      for (int i = 0; i < 64; ++i) m(i / 8, i % 8) = c[i];
      return FockOperator(m, s);
    };
    const FockOperator a = rnd(), b = rnd(), c = rnd();
    const FockOperator jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    const FockOperator leib = commutator(a, b * c) - (commutator(a, b) * c + b * commutator(a, c));
    worst = std::max({worst, jac.entries().cwiseAbs().maxCoeff(), leib.entries().cwiseAbs().maxCoeff()});
  }
  return {worst, 1e-11};
}

CheckResult linear_symbols_agree() {
  const HermiteBasisSpec spec(10, PlanckScale(1.4));
  const PhaseSymbol f = PhaseSymbol::constant(2.0) + PhaseSymbol::x() * Complex(3.0) + PhaseSymbol::p() * Complex(0, -1.5);
  const CMatrix ref = quantize(OrderingScheme::Weyl, f, spec).entries();
  double worst = 0.0;
  for (OrderingScheme s : kAllSchemes)
    worst = std::max(worst, max_abs_block(quantize(s, f, spec).entries() - ref, exact_block(10, 1)));
  return {worst, 1e-13};
}

CheckResult self_adjointness() {
  const PlanckScale s(1.0);
  const HermiteBasisSpec spec(14, s);
  const PhaseSymbol f = PhaseSymbol::monomial(3, 2) + PhaseSymbol::monomial(1, 1, 2.0) -
                        PhaseSymbol::monomial(2, 0) + PhaseSymbol::monomial(0, 4, 0.5);
  const int block = exact_block(14, f.degree());
  double worst = 0.0;
  for (OrderingScheme sc : {OrderingScheme::Weyl, OrderingScheme::Wick, OrderingScheme::AntiWick}) {
    const CMatrix q = quantize(sc, f, spec).entries();
    worst = std::max(worst, max_abs_block(q - q.adjoint(), block) / std::max(1.0, max_abs_block(q, block)));
  }
  const CMatrix xp = quantize(OrderingScheme::PDOStandard, PhaseSymbol::monomial(1, 1), spec).entries();
  const double asym = max_abs_block(xp - xp.adjoint(), exact_block(14, 2));
  return {std::max(worst, std::max(0.0, 0.5 * s.value() - asym)), 1e-12};
}

CheckResult wick_gap() {
  double worst = 0.0;
  for (double h : {0.5, 1.0, 2.0}) {
    const HermiteBasisSpec spec(16, PlanckScale(h));
    const PhaseSymbol f = PhaseSymbol::monomial(2, 0);
    const CMatrix d = quantize(OrderingScheme::AntiWick, f, spec).entries() - quantize(OrderingScheme::Wick, f, spec).entries();
    worst = std::max(worst, max_abs_block(d - h * CMatrix::Identity(16, 16), exact_block(16, 2)));
  }
  return {worst, 1e-12};
}

CheckResult toeplitz_bridge() {
  const HermiteBasisSpec spec(24, PlanckScale(1.0));
  double worst = 0.0;
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n <= d; ++n) worst = std::max(worst, antiwick_toeplitz_bridge(PhaseSymbol::monomial(n, d - n), spec));
  return {worst, 1e-9};
}

CheckResult holo_norm_quadrature() {
  std::mt19937_64 rng(23);
  double worst = 0.0;
  const SpaceSpec sb = SpaceSpec::segal_bargmann(0.8);
  const HoloFunction f(sb, 10, random_coeffs(rng, 11));
  worst = std::max(worst, rel(quadrature_norm_sq(f, complex_gaussian(12, PlanckScale(0.8), GaussianWeight::Mu)), f.norm_sq()));
  for (double a : {0.0, 1.5}) {
    const HoloFunction g(a == 0.0 ? SpaceSpec::bergman() : SpaceSpec::weighted_bergman(a), 8, random_coeffs(rng, 9));
    worst = std::max(worst, rel(quadrature_norm_sq(g, disk_rule(12, 20, a)), g.norm_sq()));
  }
  const HoloFunction hf(SpaceSpec::hardy(), 8, random_coeffs(rng, 9));
  worst = std::max(worst, rel(quadrature_norm_sq(hf, circle_rule(20)), hf.norm_sq()));
  return {worst, 1e-8};
}

CheckResult coherent_norm() {
  const PlanckScale s(0.9);
  const SpaceSpec nu = SpaceSpec::invariant_gaussian(s.value());
  double worst = 0.0;
  for (Complex z : {Complex(0.0, 0.0), Complex(1.0, 0.5), Complex(-0.7, -1.2)}) {
    const double k = kernel(nu, z, z).real();
    worst = std::max(worst, rel(coherent_state(z, s).norm_sq(), k));
  }
  return {worst, 1e-10};
}

CheckResult su2_closure() {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  auto shape = [](const su2::Matrix2& m) {
    return std::max({abs(m(0, 0) - std::conj(m(1, 1))), abs(m(0, 1) + std::conj(m(1, 0))),
                     abs(std::norm(m(0, 0)) + std::norm(m(1, 0)) - 1.0)});
  };
  for (int i = 0; i < 100; ++i) {
    const su2::GroupElement g = su2::random_su2(rng), h = su2::random_su2(rng);
    worst = std::max({worst, shape((g * h).matrix()), shape(g.inverse().matrix())});
  }
  return {worst, 1e-12};
}

CheckResult su2_homomorphism() {
  std::mt19937_64 rng(32);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const su2::GroupElement g = i % 2 ? su2::random_su2(rng) : su2::random_sl2c(rng, 0.8);
    const su2::GroupElement h = i % 2 ? su2::random_su2(rng) : su2::random_sl2c(rng, 0.8);
    for (int two_l = 0; two_l <= 6; ++two_l) {
      const CMatrix d = su2::rep_matrix(two_l, g * h) - su2::rep_matrix(two_l, g) * su2::rep_matrix(two_l, h);
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
  }
  return {worst, 1e-10};
}

CheckResult su2_class_function() {
  std::mt19937_64 rng(33);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const su2::GroupElement g = su2::random_su2(rng), h = su2::random_su2(rng);
    for (int two_l = 0; two_l <= 6; ++two_l)
      worst = std::max(worst, abs(su2::character(two_l, h * g * h.inverse()) - su2::character(two_l, g)));
  }
  return {worst, 1e-12};
}

CheckResult su2_heat_kak() {
  std::mt19937_64 rng(34);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const su2::GroupElement g = su2::random_sl2c(rng, 1.0), k = su2::random_su2(rng);
    const Complex tr = g.trace();
    const Complex lam = (tr + std::sqrt(tr * tr - 4.0)) / 2.0;
    su2::Matrix2 d = su2::Matrix2::Zero();
    d(0, 0) = lam;
    d(1, 1) = 1.0 / lam;
    const Complex v = su2::heat_kernel(0.7, g).value;
    const Complex v1 = su2::heat_kernel(0.7, k * g * k.inverse()).value;
    const Complex v2 = su2::heat_kernel(0.7, su2::GroupElement(d, su2::GroupTag::SL2C)).value;
    worst = std::max({worst, abs(v1 - v) / std::max(1.0, abs(v)), abs(v2 - v) / std::max(1.0, abs(v))});
  }
  return {worst, 1e-10};
}

CheckResult su2_eigenvalue_law() {
  std::mt19937_64 rng(35);
  double worst = 0.0;
  for (int two_l = 0; two_l <= 8; ++two_l) {
    const su2::PeterWeylCoeffs chi = su2::PeterWeylCoeffs::character(two_l);
    const double l = two_l / 2.0, hbar = 0.6;
    for (int i = 0; i < 5; ++i) {
      const su2::GroupElement g = su2::random_sl2c(rng, 0.6);
      const Complex want = std::exp(-hbar * l * (l + 1.0) / 2.0) * su2::character(two_l, g);
      worst = std::max(worst, abs(su2::transform_group(chi, g, hbar) - want) / std::max(1.0, abs(want)));
    }
  }
  return {worst, 1e-12};
}

CheckResult su2_schur_norm() {
  const QuadratureRule rule = su2::euler_quadrature(su2::euler_orders_for_degree(12));
  const double a[] = {0.5, -1.0, 0.25, 2.0};
  auto f = [&](const su2::GroupElement& g) {
    Complex s;
    for (int two_l = 0; two_l < 4; ++two_l) s += a[two_l] * su2::character(two_l, g);
    return s;
  };
  double want = 0.0;
  for (double v : a) want += v * v;
  const su2::PeterWeylCoeffs c = su2::project_peter_weyl(f, 3, rule);
  Complex q;
  for (std::size_t i = 0; i < rule.size(); ++i) q += rule.weight(i) * std::norm(f(su2::group_node(rule, i)));
  return {std::max(rel(c.norm_sq(), want), rel(q.real() / rule.total_mass(), want)), 1e-10};
}

}  // namespace

const std::vector<Check>& selftest_registry() {
  static const std::vector<Check> checks = {
      {"quadrature", "mass", "every rule integrates 1 to its total mass", quadrature_mass},
      {"quadrature", "hermite-odd", "Gauss-Hermite kills x^(2n-1)", gauss_hermite_odd},
      {"quadrature", "mu-moments", "int z^n conj(z)^m dmu_t = delta n! t^n", mu_moment_table},
      {"fock", "sparsity", "a, a* shifts; X, P tridiagonal", fock_sparsity},
      {"fock", "trivial-ccr", "[X,X] = [P,P] = 0", fock_trivial_ccr},
      {"fock", "ccr-corner", "[a,a*] = hbar I except the corner hbar(1-N)", fock_corner},
      {"fock", "self-adjoint", "X = X*, P = P*", fock_self_adjoint},
      {"fock", "svn", "ladder identities on the leading block", fock_svn},
      {"holospace", "norm-quadrature", "coefficient norm matches quadrature", holo_norm_quadrature},
      {"holospace", "conjugate-symmetry", "K(w,z) = conj K(z,w) at 1e6 pairs", kernel_conjugate_symmetry},
      {"holospace", "kernel-idempotence", "int K(z,w) K(w,u) = K(z,u)", kernel_idempotence},
      {"holospace", "hardy-monotone", "circle integrals increase with r", hardy_monotone},
      {"holospace", "kernel-tail", "basis sums converge monotonically", kernel_tail_decay},
      {"holospace", "translate-phase", "T_a T_b = exp(-i Im(a conj b)/t) T_(a+b)", translate_phase},
      {"holospace", "exp-ccr", "V_r W_s = exp(-irs/hbar) W_s V_r", exponentiated_ccr},
      {"transform", "a-paths", "A is isometric; integral and coefficient paths agree", transform_paths},
      {"transform", "cauchy-riemann", "C psi is holomorphic", cauchy_riemann},
      {"transform", "ground-state", "G psi is unitary into L2(f0^2 dx)", ground_state_unitarity},
      {"transform", "adjoint-kernel", "A A* reproduces exp(z conj w / hbar)", adjoint_kernel_check},
      {"transform", "coherent-norm", "<psi_z, psi_z> = K(z,z)", coherent_norm},
      {"transform", "husimi-nonnegative", "H_psi >= 0 on a grid", husimi_nonnegative},
      {"quantize", "poisson-laws", "antisymmetry, bilinearity, Jacobi, Leibniz", poisson_laws},
      {"quantize", "commutator-laws", "matrix Jacobi and Leibniz", matrix_brackets},
      {"quantize", "linear-symbols", "all schemes agree in degree <= 1", linear_symbols_agree},
      {"quantize", "self-adjoint", "real symbols give self-adjoint Weyl/Wick/anti-Wick; PDO(xp) is not", self_adjointness},
      {"quantize", "wick-gap", "anti-Wick(x^2) - Wick(x^2) = hbar I", wick_gap},
      {"quantize", "toeplitz-bridge", "A T A^-1 = anti-Wick for x^n p^m, n+m <= 4", toeplitz_bridge},
      {"su2", "closure", "SU(2) closed under product and inverse", su2_closure},
      {"su2", "homomorphism", "pi_l(gh) = pi_l(g) pi_l(h), l <= 3", su2_homomorphism},
      {"su2", "class-function", "chi_l(h g h^-1) = chi_l(g)", su2_class_function},
      {"su2", "heat-kak", "rho_t depends only on the eigenvalues", su2_heat_kak},
      {"su2", "eigenvalue-law", "chi_l flows by exp(-hbar l(l+1)/2)", su2_eigenvalue_law},
      {"su2", "schur-norm", "Peter-Weyl norm matches quadrature", su2_schur_norm},
  };
  return checks;
}

int run_selftest(std::ostream& out, const std::string& filter) {
  int failures = 0;
  char line[256];
  std::snprintf(line, sizeof line, "%-11s %-20s %-10s %-10s %s\n", "module", "check", "residual", "tolerance", "status");
  out << line;
  for (const Check& c : selftest_registry()) {
    if (!filter.empty() && c.module != filter) continue;
    CheckResult r;
    bool ok = false;
    std::string note;
    try {
      r = c.run();
      ok = r.pass();
    } catch (const std::exception& e) {
      note = e.what();
    }
    if (!ok) ++failures;
    std::snprintf(line, sizeof line, "%-11s %-20s %-10.3e %-10.3e %s", c.module.c_str(), c.name.c_str(), r.residual,
                  r.tolerance, ok ? "PASS" : "FAIL");
    out << line;
    if (!note.empty()) out << " (" << note << ")";
    out << "\n";
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
  return failures;
}

}  // namespace holoquant
