#include "holoquant/fock.hpp"

#include <cmath>

#include "holoquant/simd.hpp"

namespace holoquant {

FockOperator::FockOperator(CMatrix entries, PlanckScale scale) : m_(std::move(entries)), scale_(scale) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("FockOperator must be square");
  if (m_.rows() < 2) throw InvalidArgument("FockOperator truncation must be >= 2");
}

FockOperator FockOperator::zero(const HermiteBasisSpec& spec) {
  return {CMatrix::Zero(spec.truncation, spec.truncation), spec.scale};
}

FockOperator FockOperator::identity(const HermiteBasisSpec& spec) {
  return {CMatrix::Identity(spec.truncation, spec.truncation), spec.scale};
}

void FockOperator::check_compatible(const FockOperator& o) const {
  if (o.truncation() != truncation() || !(o.scale_ == scale_))
    throw InvalidArgument("FockOperator truncation or scale mismatch");
}

FockOperator FockOperator::adjoint() const { return {m_.adjoint(), scale_}; }

FockOperator FockOperator::operator+(const FockOperator& o) const {
  check_compatible(o);
  return {m_ + o.m_, scale_};
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
  check_compatible(o);
  return {m_ - o.m_, scale_};
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
  check_compatible(o);
  return {matmul(m_, o.m_), scale_};
}

FockOperator FockOperator::operator*(Complex s) const { return {m_ * s, scale_}; }

CVector FockOperator::apply(const CVector& v) const {
  if (v.size() != m_.cols()) throw InvalidArgument("vector length mismatch");
  CVector out = CVector::Zero(m_.rows());
  simd::active().cgemm(m_.rows(), 1, m_.cols(), m_.data(), v.data(), out.data());
  return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matmul: inner dimension mismatch");
  CMatrix c = CMatrix::Zero(a.rows(), b.cols());
  simd::active().cgemm(a.rows(), b.cols(), a.cols(), a.data(), b.data(), c.data());
  return c;
}

LadderPair ladder(const HermiteBasisSpec& spec) {
  const int n = spec.truncation;
  const double h = spec.scale.value();
  CMatrix a = CMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(h * k);
  CMatrix ad = a.adjoint();
  return {FockOperator(a, spec.scale), FockOperator(ad, spec.scale)};
}

CanonicalPair position_momentum(const HermiteBasisSpec& spec) {
  const int n = spec.truncation;
  const double h = spec.scale.value();
  CMatrix x = CMatrix::Zero(n, n), p = CMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double v = std::sqrt(h * k / 2.0);
    x(k - 1, k) = v;
    x(k, k - 1) = v;
    p(k - 1, k) = Complex(0.0, -v);
    p(k, k - 1) = Complex(0.0, v);
  }
  return {FockOperator(x, spec.scale), FockOperator(p, spec.scale)};
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

FockOperator kron(const FockOperator& a, const FockOperator& b) {
  if (!(a.scale() == b.scale())) throw InvalidArgument("kron: scale mismatch");
  const int na = a.truncation(), nb = b.truncation();
  CMatrix k(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) k.block(i * nb, j * nb, nb, nb) = a(i, j) * b.entries();
  return {k, a.scale()};
}

std::vector<double> hermite_functions(int n_max, double x, PlanckScale scale) {
  if (n_max < 0 || n_max >= kMaxHermiteOrder)
    throw InvalidArgument("hermite order out of range");
  const double h = scale.value();
  std::vector<double> out(n_max + 1);
  out[0] = std::pow(pi * h, -0.25) * std::exp(-x * x / (2.0 * h));
  if (n_max >= 1) out[1] = std::sqrt(2.0 / h) * x * out[0];
  for (int n = 1; n < n_max; ++n)
    out[n + 1] = std::sqrt(2.0 / (h * (n + 1))) * x * out[n] - std::sqrt(double(n) / (n + 1)) * out[n - 1];
  return out;
}

double hermite_eval(int n, double x, PlanckScale scale) { return hermite_functions(n, x, scale)[n]; }

double SvnReport::max_residual() const {
  return std::max({number_residual, lowering_residual, gram_residual});
}

SvnReport svn_ladder_identities(const HermiteBasisSpec& spec) {
  const int n = spec.truncation;
  const double h = spec.scale.value();
  const auto [a, ad] = ladder(spec);
  const FockOperator e = ad * a;
  SvnReport r;
  // v_k = (a*)^k e_0
  std::vector<CVector> v(n);
  v[0] = CVector::Zero(n);
  v[0](0) = 1.0;
  for (int k = 1; k < n; ++k) v[k] = ad.apply(v[k - 1]);
  std::vector<double> fact(n, 1.0);
  for (int k = 1; k < n; ++k) fact[k] = fact[k - 1] * h * k;
  for (int k = 0; k < n - 1; ++k) {
    CVector ek = CVector::Zero(n);
    ek(k) = 1.0;
    r.number_residual = std::max(r.number_residual, (e.apply(ek) - h * k * ek).cwiseAbs().maxCoeff());
    if (k >= 1)
      r.lowering_residual =
          std::max(r.lowering_residual, (a.apply(v[k]) - h * k * v[k - 1]).cwiseAbs().maxCoeff() / fact[k]);
    for (int m = 0; m < n - 1; ++m) {
      const Complex g = v[k].dot(v[m]);
      const double expect = k == m ? fact[k] : 0.0;
      r.gram_residual = std::max(r.gram_residual, std::abs(g - expect) / std::max(1.0, fact[std::max(k, m)]));
    }
  }
  return r;
}

int exact_block(int truncation, int degree) {
  return truncation - (std::max(degree, 0) + 1) / 2;
}

double max_abs_block(const CMatrix& m, int block) {
  if (block <= 0) return 0.0;
  return m.topLeftCorner(block, block).cwiseAbs().maxCoeff();
}

}  // namespace holoquant
