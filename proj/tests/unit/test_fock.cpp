#include <doctest.h>

#include "holoquant/fock.hpp"
#include "oracles.hpp"

using namespace holoquant;

namespace {

CVector basis(int n, int k) {
  CVector v = CVector::Zero(n);
  v(k) = 1.0;
  return v;
}

double block_diff(const CMatrix& a, const CMatrix& b, int k) {
  return (a - b).topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("ladder: ground state and first excitation") {
  for (double h : {0.5, 1.0, 2.0}) {
    const HermiteBasisSpec spec(8, PlanckScale(h));
    const auto [a, ad] = ladder(spec);
    CHECK(a.apply(basis(8, 0)).norm() == 0.0);
    CHECK((ad.apply(basis(8, 0)) - std::sqrt(h) * basis(8, 1)).norm() < 1e-15);
    CHECK((ad.entries() - a.entries().adjoint()).norm() == 0.0);
  }
}

TEST_CASE("ladder: commutator is hbar on the leading block, corner known") {
  const int n = 12;
  const double h = 0.7;
  const auto [a, ad] = ladder(HermiteBasisSpec(n, PlanckScale(h)));
  const CMatrix c = commutator(a, ad).entries();
  CHECK(block_diff(c, h * CMatrix::Identity(n, n), n - 1) < 1e-14);
  CHECK(std::abs(c(n - 1, n - 1) - h * (1.0 - n)) < 1e-13);
}

TEST_CASE("ladder: exact sparsity") {
  const int n = 10;
  const HermiteBasisSpec spec(n, PlanckScale(1.3));
  const auto [a, ad] = ladder(spec);
  const auto [x, p] = position_momentum(spec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j != i + 1) CHECK(a(i, j) == 0.0);
      if (i != j + 1) CHECK(ad(i, j) == 0.0);
      if (std::abs(i - j) != 1) {
        CHECK(x(i, j) == 0.0);
        CHECK(p(i, j) == 0.0);
      }
    }
}

TEST_CASE("position_momentum: canonical relations") {
  const int n = 16;
  for (double h : {0.25, 1.0, 3.0}) {
    const auto [x, p] = position_momentum(HermiteBasisSpec(n, PlanckScale(h)));
    CHECK(block_diff(commutator(x, p).entries(), I * h * CMatrix::Identity(n, n), n - 1) < 1e-13);
    CHECK(commutator(x, x).entries().norm() == 0.0);
    CHECK(commutator(p, p).entries().norm() == 0.0);
    CHECK(x.entries() == x.entries().adjoint());
    CHECK(p.entries() == p.entries().adjoint());
    for (int i = 0; i < n; ++i) CHECK(x(i, i) == 0.0);
  }
}

TEST_CASE("position_momentum: ground state second moment") {
  const double h = 0.6;
  const auto [x, p] = position_momentum(HermiteBasisSpec(6, PlanckScale(h)));
  const Complex m = (x * x)(0, 0);
  const double ref = oracle::trapezoid(
      [&](double s) {
        const double f = oracle::hermite(0, s, h)[0];
        return s * s * f * f;
      },
      -15.0, 15.0, 30000);
  CHECK(std::abs(m - ref) < 1e-12);
  CHECK(std::abs(m - h / 2.0) < 1e-15);
}

TEST_CASE("position_momentum: matrix elements against the oracle") {
  const double h = 1.7;
  const int n = 10;
  const auto [x, p] = position_momentum(HermiteBasisSpec(n, PlanckScale(h)));
  for (int i = 0; i + 1 < n; ++i) {
    // <e_i, X e_{i+1}> = int x h_i h_{i+1}
    const double ref = oracle::trapezoid(
        [&](double s) {
          const auto v = oracle::hermite(i + 1, s, h);
          return s * v[i] * v[i + 1];
        },
        -20.0, 20.0, 40000);
    CHECK(std::abs(x(i, i + 1) - ref) < 1e-10);
  }
}

TEST_CASE("hermite_eval: values and normalization") {
  CHECK(hermite_eval(0, 0.0, PlanckScale(1.0)) == doctest::Approx(std::pow(oracle::pi, -0.25)).epsilon(1e-15));
  CHECK(hermite_eval(1, 0.0, PlanckScale(1.0)) == 0.0);
  for (double h : {0.5, 2.0})
    for (int n = 0; n <= 20; ++n) {
      const double nrm = oracle::trapezoid(
          [&](double s) {
            const double v = hermite_eval(n, s, PlanckScale(h));
            return v * v;
          },
          -30.0, 30.0, 60000);
      CHECK(nrm == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hermite_eval: recurrence agrees with the oracle, large order finite") {
  const auto v = hermite_functions(40, 1.3, PlanckScale(0.8));
  const auto ref = oracle::hermite(40, 1.3, 0.8);
  for (int n = 0; n <= 40; ++n) CHECK(std::abs(v[n] - ref[n]) < 1e-13);
  CHECK(std::isfinite(hermite_eval(500, 25.0, PlanckScale(1.0))));
  CHECK_THROWS_AS(hermite_eval(kMaxHermiteOrder, 0.0, PlanckScale(1.0)), InvalidArgument);
  CHECK_THROWS_AS(hermite_eval(-1, 0.0, PlanckScale(1.0)), InvalidArgument);
}

TEST_CASE("commutator: documented examples") {
  const int n = 16;
  const double h = 0.9;
  const auto [x, p] = position_momentum(HermiteBasisSpec(n, PlanckScale(h)));
  CHECK(commutator(x, x).entries().norm() == 0.0);
  const FockOperator x2 = x * x, x3 = x2 * x, p2 = p * p;
  const CMatrix lhs = commutator(x3, p2).entries() / (I * h);
  const CMatrix rhs = 3.0 * (x2 * p + p * x2).entries();
  const int k = exact_block(n, 5);
  REQUIRE(k > 0);
  CHECK(block_diff(lhs, rhs, k) < 1e-12);
}

TEST_CASE("commutator: mismatched operators rejected") {
  const auto a = position_momentum(HermiteBasisSpec(4, PlanckScale(1.0))).x;
  const auto b = position_momentum(HermiteBasisSpec(5, PlanckScale(1.0))).x;
  const auto c = position_momentum(HermiteBasisSpec(4, PlanckScale(2.0))).x;
  CHECK_THROWS_AS(commutator(a, b), InvalidArgument);
  CHECK_THROWS_AS(commutator(a, c), InvalidArgument);
  CHECK_THROWS_AS(HermiteBasisSpec(1, PlanckScale(1.0)), InvalidArgument);
}

TEST_CASE("adjoint: involution") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  CMatrix m(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = Complex(nd(rng), nd(rng));
  const FockOperator op(m, PlanckScale(1.0));
  CHECK(op.adjoint().adjoint().entries() == m);
}

TEST_CASE("svn_ladder_identities: documented examples") {
  CHECK(svn_ladder_identities(HermiteBasisSpec(8, PlanckScale(1.0))).max_residual() < 1e-12);
  CHECK(svn_ladder_identities(HermiteBasisSpec(20, PlanckScale(2.5))).max_residual() < 1e-12);
  const auto [a, ad] = ladder(HermiteBasisSpec(8, PlanckScale(2.0)));
  const CVector e0 = basis(8, 0);
  CHECK(((ad * a).apply(e0)).norm() == 0.0);
  const CVector v = ad.apply(ad.apply(e0));
  CHECK(v.squaredNorm() == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("kron: commuting tensor factors") {
  const HermiteBasisSpec spec(6, PlanckScale(1.0));
  const auto [x, p] = position_momentum(spec);
  const FockOperator id = FockOperator::identity(spec);
  const FockOperator x1 = kron(x, id), p2 = kron(id, p);
  CHECK(commutator(x1, p2).entries().norm() < 1e-14);
  CHECK(x1.truncation() == 36);
}

TEST_CASE("matmul: agrees with Eigen product") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (auto [m, k, n] : {std::array{1, 1, 1}, std::array{7, 5, 3}, std::array{33, 17, 29}}) {
    CMatrix a(m, k), b(k, n);
    for (int i = 0; i < a.size(); ++i) a(i) = Complex(nd(rng), nd(rng));
    for (int i = 0; i < b.size(); ++i) b(i) = Complex(nd(rng), nd(rng));
    CHECK((matmul(a, b) - a * b).cwiseAbs().maxCoeff() < 1e-12);
  }
}
