#include <doctest.h>

#include "holoquant/quantize.hpp"
#include "holoquant/symbol_parse.hpp"
#include "oracles.hpp"

using namespace holoquant;

namespace {

const Complex I(0.0, 1.0);

double block_diff(const CMatrix& a, const CMatrix& b, int k) {
  return (a - b).topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

PhaseSymbol random_symbol(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> c(-3, 3);
  PhaseSymbol f;
  for (int n = 0; n <= degree; ++n)
    for (int m = 0; n + m <= degree; ++m) {
      const int v = c(rng);
      if (v != 0) f.add_term({n, m}, double(v));
    }
  return f;
}

PhaseSymbol sym(const char* text) { return parse_symbol(text); }

}  // namespace

TEST_CASE("poisson: documented examples") {
  const PhaseSymbol x = PhaseSymbol::x(), p = PhaseSymbol::p();
  CHECK(poisson(x, p) == PhaseSymbol::constant(1.0));
  CHECK(poisson(sym("x^3"), sym("p^2")) == sym("6*x^2*p"));
  const PhaseSymbol ham = PhaseSymbol::monomial(0, 2, 0.5) + sym("x^4 - 2*x");
  CHECK(poisson(ham, ham).empty());
}

TEST_CASE("poisson: bracket laws on random polynomials") {
  std::mt19937_64 rng(97);
  for (int k = 0; k < 30; ++k) {
    const PhaseSymbol f = random_symbol(rng, 4), g = random_symbol(rng, 4), u = random_symbol(rng, 4);
    CHECK(poisson(f, g) == poisson(g, f) * Complex(-1.0));
    CHECK(poisson(f * Complex(2.0) + g, u) == poisson(f, u) * Complex(2.0) + poisson(g, u));
    CHECK((poisson(f, poisson(g, u)) + poisson(g, poisson(u, f)) + poisson(u, poisson(f, g))).empty());
    CHECK(poisson(f, g * u) == poisson(f, g) * u + g * poisson(f, u));
  }
}

TEST_CASE("poisson: two degrees of freedom") {
  const PhaseSymbol x0 = PhaseSymbol::x(0, 2), x1 = PhaseSymbol::x(1, 2), p0 = PhaseSymbol::p(0, 2),
                    p1 = PhaseSymbol::p(1, 2);
  CHECK(poisson(x0, p0) == PhaseSymbol::constant(1.0, 2));
  CHECK(poisson(x0, p1).empty());
  CHECK(poisson(x1, p1) == PhaseSymbol::constant(1.0, 2));
}

TEST_CASE("quantize: ordering table") {
  const int n = 16;
  const double h = 0.7;
  const HermiteBasisSpec spec(n, PlanckScale(h));
  const auto [x, p] = position_momentum(spec);
  const CMatrix X = x.entries(), P = p.entries(), Id = CMatrix::Identity(n, n);
  const int k3 = exact_block(n, 3), k2 = exact_block(n, 2);
  CHECK(block_diff(quantize(OrderingScheme::Weyl, sym("x^2*p"), spec).entries(),
                   (X * X * P + X * P * X + P * X * X) / 3.0, k3) < 1e-12);
  CHECK(block_diff(quantize(OrderingScheme::Wick, sym("x^2"), spec).entries(), X * X - h / 2 * Id, k2) < 1e-12);
  CHECK(block_diff(quantize(OrderingScheme::AntiWick, sym("x^2"), spec).entries(), X * X + h / 2 * Id, k2) < 1e-12);
  CHECK(block_diff(quantize(OrderingScheme::Wick, PhaseSymbol::monomial(2, 0, 0.5) + PhaseSymbol::monomial(0, 2, 0.5),
                            spec)
                       .entries(),
                   (X * X + P * P) / 2.0 - h / 2 * Id, k2) < 1e-12);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 4; ++b) {
      CMatrix want = Id;
      for (int i = 0; i < a; ++i) want = want * X;
      for (int i = 0; i < b; ++i) want = want * P;
      CHECK(block_diff(quantize(OrderingScheme::PDOStandard, PhaseSymbol::monomial(a, b), spec).entries(), want,
                       exact_block(n, a + b)) < 1e-11);
    }
  CHECK(block_diff(quantize(OrderingScheme::PDOReverse, sym("x*p"), spec).entries(), P * X, k2) < 1e-12);
}

TEST_CASE("quantize: constants and linear symbols agree across schemes") {
  const HermiteBasisSpec spec(10, PlanckScale(1.3));
  const PhaseSymbol lin = sym("2 - 3*x + 0.5*p");
  const CMatrix ref = quantize(OrderingScheme::Weyl, lin, spec).entries();
  for (OrderingScheme s : kAllSchemes) {
    CHECK(block_diff(quantize(s, lin, spec).entries(), ref, 9) < 1e-13);
    CHECK(block_diff(quantize(s, PhaseSymbol::constant(1.0), spec).entries(), CMatrix::Identity(10, 10), 10) == 0.0);
  }
}

TEST_CASE("quantize: self-adjointness and the xp counterexample") {
  const int n = 14;
  const double h = 0.9;
  const HermiteBasisSpec spec(n, PlanckScale(h));
  std::mt19937_64 rng(101);
  for (int k = 0; k < 5; ++k) {
    const PhaseSymbol f = random_symbol(rng, 4);
    for (OrderingScheme s : {OrderingScheme::Weyl, OrderingScheme::Wick, OrderingScheme::AntiWick}) {
      const CMatrix q = quantize(s, f, spec).entries();
      CHECK(block_diff(q, q.adjoint(), exact_block(n, 4)) < 1e-11);
    }
  }
  const CMatrix pdo = quantize(OrderingScheme::PDOStandard, sym("x*p"), spec).entries();
  // XP - (XP)* = [X, P] = i hbar
  CHECK(block_diff(pdo - pdo.adjoint(), I * h * CMatrix::Identity(n, n), n - 2) < 1e-12);
  CHECK((pdo - pdo.adjoint()).topLeftCorner(n - 2, n - 2).cwiseAbs().maxCoeff() > 0.5 * h);
}

TEST_CASE("quantize: Wick and anti-Wick gap") {
  const int n = 12;
  const double h = 1.7;
  const HermiteBasisSpec spec(n, PlanckScale(h));
  const CMatrix gap = quantize(OrderingScheme::AntiWick, sym("x^2"), spec).entries() -
                      quantize(OrderingScheme::Wick, sym("x^2"), spec).entries();
  CHECK(block_diff(gap, h * CMatrix::Identity(n, n), exact_block(n, 2)) < 1e-12);
}

TEST_CASE("quantize: insufficient truncation") {
  const HermiteBasisSpec spec(4, PlanckScale(1.0));
  CHECK_THROWS_AS(quantize(OrderingScheme::Weyl, sym("x^6"), spec, 2), InsufficientTruncation);
}

TEST_CASE("quantize: two degrees of freedom") {
  const int n = 6;
  const HermiteBasisSpec spec(n, PlanckScale(1.0));
  const auto [x, p] = position_momentum(spec);
  PhaseSymbol f(2);
  f.add_term({1, 0, 0, 1}, 1.0);  // x_0 p_1
  const FockOperator q = quantize(OrderingScheme::Weyl, f, spec);
  CHECK(q.truncation() == n * n);
  CHECK((q.entries() - kron(x, p).entries()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("heat_smooth: documented examples") {
  const double h = 0.6;
  const PlanckScale s(h);
  const PhaseSymbol osc = PhaseSymbol::monomial(2, 0, 0.5) + PhaseSymbol::monomial(0, 2, 0.5);
  CHECK(heat_smooth(osc, s).max_abs_diff(osc + PhaseSymbol::constant(h / 2)) < 1e-15);
  CHECK(heat_smooth(PhaseSymbol::constant(2.5), s) == PhaseSymbol::constant(2.5));
  // term-by-term: Delta x^4 = 12 x^2, Delta^2 x^4 = 24
  const PhaseSymbol want = sym("x^4") + PhaseSymbol::monomial(2, 0, 3.0 * h) + PhaseSymbol::constant(0.75 * h * h);
  const PhaseSymbol got = heat_smooth(sym("x^4"), s);
  CHECK(got.max_abs_diff(want) < 1e-15);
  const int n = 16;
  const HermiteBasisSpec spec(n, s);
  CHECK(block_diff(quantize(OrderingScheme::AntiWick, sym("x^4"), spec).entries(),
                   quantize(OrderingScheme::Weyl, got, spec).entries(), exact_block(n, 4)) < 1e-11);
}

TEST_CASE("heat_smooth: anti-Wick equals Weyl of the smoothed symbol") {
  const int n = 18;
  const HermiteBasisSpec spec(n, PlanckScale(0.8));
  std::mt19937_64 rng(103);
  for (int k = 0; k < 5; ++k) {
    const PhaseSymbol f = random_symbol(rng, 4);
    CHECK(block_diff(quantize(OrderingScheme::AntiWick, f, spec).entries(),
                     quantize(OrderingScheme::Weyl, heat_smooth(f, spec.scale), spec).entries(),
                     exact_block(n, 4)) < 1e-10);
  }
}

TEST_CASE("commutator_vs_poisson: documented examples") {
  const int n = 12;
  const double h = 0.8;
  const HermiteBasisSpec spec(n, PlanckScale(h));
  CHECK(commutator_vs_poisson(PhaseSymbol::x(), PhaseSymbol::p(), spec).max_abs < 1e-12);
  const PhaseSymbol ham = PhaseSymbol::monomial(0, 2, 0.5) + sym("x^2 - 3*x");
  CHECK(commutator_vs_poisson(PhaseSymbol::x(), ham, spec).max_abs < 1e-12);
  // with H = p^2 + V both sides become 2P
  const PhaseSymbol ham2 = sym("p^2 + x^2");
  const auto r = commutator_vs_poisson(PhaseSymbol::x(), ham2, spec);
  const CMatrix P = position_momentum(spec).p.entries();
  CHECK(block_diff(r.quantum, 2.0 * P, r.block) < 1e-12);
  CHECK(block_diff(r.classical, 2.0 * P, r.block) < 1e-12);
}

TEST_CASE("commutator_vs_poisson: cubic pair matches exact matrix arithmetic") {
  const int n = 12;
  const double h = 1.0;
  const HermiteBasisSpec spec(n, PlanckScale(h));
  const auto r = commutator_vs_poisson(sym("x^3"), sym("p^2"), spec);
  const auto [x, p] = position_momentum(spec);
  const CMatrix X = x.entries(), P = p.entries();
  const CMatrix quantum = 3.0 * (X * X * P + P * X * X);
  const CMatrix classical = 2.0 * (X * X * P + X * P * X + P * X * X);
  REQUIRE(r.block > 0);
  CHECK(block_diff(r.quantum, quantum, r.block) < 1e-11);
  CHECK(block_diff(r.classical, classical, r.block) < 1e-11);
  CHECK(block_diff(r.discrepancy, quantum - classical, r.block) < 1e-11);
}

TEST_CASE("commutator_vs_poisson: low degree pairs vanish") {
  const HermiteBasisSpec spec(12, PlanckScale(0.5));
  std::mt19937_64 rng(107);
  for (int k = 0; k < 10; ++k) {
    const PhaseSymbol f = random_symbol(rng, 2), g = random_symbol(rng, 1);
    CHECK(commutator_vs_poisson(f, g, spec).max_abs < 1e-12);
  }
}

TEST_CASE("matrix commutator: Jacobi and Leibniz") {
  const HermiteBasisSpec spec(8, PlanckScale(1.0));
  std::mt19937_64 rng(109);
  auto q = [&](const PhaseSymbol& f) { return quantize(OrderingScheme::Weyl, f, spec); };
  const FockOperator a = q(random_symbol(rng, 2)), b = q(random_symbol(rng, 2)), c = q(random_symbol(rng, 2));
  const CMatrix jac =
      (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))).entries();
  CHECK(jac.cwiseAbs().maxCoeff() < 1e-10);
  const CMatrix leib = (commutator(a, b * c) - (commutator(a, b) * c + b * commutator(a, c))).entries();
  CHECK(leib.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("toeplitz: documented examples") {
  const int m = 10;
  const double t = 0.7;
  const PlanckScale s(t);
  const CMatrix tz = toeplitz(SBSymbol::monomial(1, 0), m, s).entries();
  const CMatrix tzb = toeplitz(SBSymbol::monomial(0, 1), m, s).entries();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double want = (i == j + 1) ? std::sqrt(t * (j + 1)) : 0.0;
      CHECK(std::abs(tz(i, j) - want) < 1e-15);
    }
  CHECK((tzb - tz.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  // t d/dz on z^n / sqrt(n! t^n)
  for (int n = 1; n < m; ++n) CHECK(std::abs(tzb(n - 1, n) - t * n / std::sqrt(t * n)) < 1e-14);
  const CMatrix d = toeplitz(SBSymbol::monomial(1, 1), m, s).entries();
  for (int n = 0; n < m; ++n) CHECK(d(n, n) == Complex(t * (n + 1)));
  CHECK((tzb * tz - d).topLeftCorner(m - 1, m - 1).cwiseAbs().maxCoeff() < 1e-14);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(d);
  CHECK(es.eigenvalues().minCoeff() >= 0.0);
}

TEST_CASE("toeplitz: closed form agrees with quadrature and factorizes") {
  const int m = 8;
  const PlanckScale s(1.2);
  const SBSymbol phi = parse_sb_symbol("z^2*zb - 2*zb^2 + 0.5i*z");
  const CMatrix a = toeplitz(phi, m, s).entries();
  const CMatrix b = toeplitz_quadrature(phi, m, s).entries();
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
  const CMatrix tz = toeplitz(SBSymbol::monomial(1, 0), m + 4, s).entries();
  const CMatrix tzb = toeplitz(SBSymbol::monomial(0, 1), m + 4, s).entries();
  const CMatrix prod = tzb * tzb * tz;  // T_{zb^2 z} = T_zb T_zb T_z
  const CMatrix direct = toeplitz(SBSymbol::monomial(1, 2), m + 4, s).entries();
  CHECK((prod - direct).topLeftCorner(m, m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("antiwick_toeplitz_bridge: documented examples") {
  const HermiteBasisSpec spec16(16, PlanckScale(0.9));
  CHECK(antiwick_toeplitz_bridge(sym("x^2"), spec16) < 1e-10);
  CHECK(antiwick_toeplitz_bridge(PhaseSymbol::constant(1.0), spec16) == 0.0);
  CHECK(antiwick_toeplitz_bridge(PhaseSymbol::monomial(2, 0, 0.5) + PhaseSymbol::monomial(0, 2, 0.5), spec16) < 1e-10);
  const HermiteBasisSpec spec24(24, PlanckScale(1.1));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) CHECK(antiwick_toeplitz_bridge(PhaseSymbol::monomial(a, b), spec24) < 1e-9);
}

TEST_CASE("bridge_symbol: phi(sqrt2 conj z)") {
  const SBSymbol b = bridge_symbol(sym("x^2*p - 3*p"));
  for (Complex z : {Complex(0.3, -0.5), Complex(1.1, 0.2)}) {
    const Complex w = std::sqrt(2.0) * std::conj(z);
    const double x = w.real(), p = w.imag();
    CHECK(std::abs(b(z) - (x * x * p - 3.0 * p)) < 1e-13);
  }
}

TEST_CASE("weyl_moment and husimi_moment: documented examples") {
  const double h = 0.7;
  const PlanckScale s(h);
  const WaveFunction e0 = WaveFunction::basis(0, s), e1 = WaveFunction::basis(1, s);
  CHECK(std::abs(weyl_moment(e0, PhaseSymbol::constant(1.0)) - 1.0) < 1e-14);
  CHECK(std::abs(weyl_moment(e0, PhaseSymbol::x())) < 1e-14);
  const double x2 = oracle::trapezoid(
      [&](double x) { return x * x * std::pow(oracle::hermite(0, x, h)[0], 2); }, -20.0, 20.0, 20000);
  CHECK(std::abs(weyl_moment(e0, sym("x^2")) - x2) < 1e-12);
  CHECK(std::abs(husimi_moment(e0, PhaseSymbol::constant(1.0)) - 1.0) < 1e-12);
  CHECK(std::abs(husimi_moment(e0, sym("x^2")) - h) < 1e-12);
  CHECK(std::abs(husimi_moment(e0, sym("x^2")) - weyl_moment(e0, heat_smooth(sym("x^2"), s))) < 1e-12);
  const PhaseSymbol r2 = sym("x^2 + p^2");
  const Complex hm = husimi_moment(e1, r2);
  CHECK(std::abs(hm - (weyl_moment(e1, r2) + h)) < 1e-12);
  // independent 2D trapezoid of (x^2 + p^2) H_{e_1}
  const double lim = 12.0;
  const int steps = 240;
  const double step = 2.0 * lim / steps;
  double q = 0.0;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j) {
      const double x = -lim + i * step, p = -lim + j * step;
      const double wx = (i == 0 || i == steps) ? 0.5 : 1.0, wp = (j == 0 || j == steps) ? 0.5 : 1.0;
      q += wx * wp * (x * x + p * p) * husimi_value(e1, x, p);
    }
  CHECK(std::abs(hm - q * step * step) < 1e-8);
}

TEST_CASE("weyl_moment: marginal identity and reality") {
  const double h = 1.1;
  std::mt19937_64 rng(113);
  const WaveFunction psi = WaveFunction(oracle::random_coeffs(rng, 7), PlanckScale(h)).normalized();
  for (const char* f : {"x", "x^2"}) {
    const int k = f[1] == '^' ? 2 : 1;
    const double want = oracle::trapezoid(
        [&](double x) { return std::pow(x, k) * std::norm(oracle::wave(psi.coeffs(), x, h)); }, -25.0, 25.0, 40000);
    CHECK(std::abs(weyl_moment(psi, sym(f)) - want) < 1e-10);
  }
  CHECK(std::abs(weyl_moment(psi, sym("x^3*p + p^4")).imag()) < 1e-12);
  for (int k = 0; k < 5; ++k) {
    const PhaseSymbol f = random_symbol(rng, 4);
    CHECK(std::abs(husimi_moment(psi, f) - weyl_moment(psi, heat_smooth(f, PlanckScale(h)))) < 1e-6);
  }
}

TEST_CASE("toeplitz_coherent_form: documented examples") {
  const double t = 0.8;
  const SpaceSpec sp = SpaceSpec::segal_bargmann(t);
  const QuadratureRule mu = complex_gaussian(20, PlanckScale(t), GaussianWeight::Mu);
  std::mt19937_64 rng(127);
  const HoloFunction f(sp, 3, oracle::random_coeffs(rng, 4)), g(sp, 3, oracle::random_coeffs(rng, 4));
  const auto one = toeplitz_coherent_form(SBSymbol::monomial(0, 0), f, g, mu);
  CHECK(one.residual < 1e-8);
  CHECK(std::abs(one.by_matrix - f.inner(g)) < 1e-8);
  const HoloFunction zn(sp, 1, {0.0, 1.0 / std::sqrt(t)});
  const auto zz = toeplitz_coherent_form(SBSymbol::monomial(1, 1), zn, zn, mu);
  CHECK(zz.residual < 1e-8);
  CHECK(std::abs(zz.by_matrix - 2.0 * t) < 1e-12);
  const auto sh = toeplitz_coherent_form(SBSymbol::monomial(1, 0), zn, HoloFunction::monomial(sp, 0), mu);
  CHECK(sh.residual < 1e-8);
  CHECK(std::abs(sh.by_matrix - std::sqrt(t)) < 1e-12);
}

TEST_CASE("parse_symbol: grammar") {
  const PhaseSymbol f = sym("x^2*p + 3*p");
  CHECK(f.coeff({2, 1}) == 1.0);
  CHECK(f.coeff({0, 1}) == 3.0);
  CHECK(sym("-x + 2.5i*p^2").coeff({0, 2}) == Complex(0.0, 2.5));
  CHECK(sym("x*x*p") == sym("x^2*p"));
  CHECK(sym(" x ^ 2 ") == sym("x^2"));
  CHECK(parse_symbol(to_string(f)) == f);
  CHECK(parse_sb_symbol("z*zb").terms().at({1, 1}) == 1.0);
  try {
    parse_symbol("(x+p)^2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 0);
  }
  CHECK_THROWS_AS(parse_symbol("x^"), ParseError);
  CHECK_THROWS_AS(parse_symbol("p^2/2"), ParseError);
  CHECK_THROWS_AS(parse_symbol("x + y"), ParseError);
  CHECK_THROWS_AS(parse_symbol(""), ParseError);
  CHECK_THROWS_AS(parse_sb_symbol("x"), ParseError);
}
