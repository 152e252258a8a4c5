#include "holoquant/transform.hpp"

#include <algorithm>
#include <cmath>

#include "holoquant/parallel.hpp"
#include "holoquant/simd.hpp"

namespace holoquant {

namespace {

// sum c_n q_n(sqrt(2) x) for real nodes, the Hermite-function expansion
// divided by the ground state
Complex ground_ratio(std::span<const Complex> c, double x, double hbar) {
  return gaussian_basis_sum(c, Complex(std::sqrt(2.0) * x, 0.0), hbar);
}

void require(const WaveFunction& psi, Representation rep, const char* what) {
  if (psi.representation() != rep) throw InvalidArgument(what);
}

}  // namespace

WaveFunction::WaveFunction(std::vector<Complex> coeffs, PlanckScale scale, Representation rep)
    : c_(std::move(coeffs)), scale_(scale), rep_(rep) {
  if (c_.empty()) throw InvalidArgument("WaveFunction needs at least one coefficient");
  if (c_.size() > static_cast<std::size_t>(kMaxHermiteOrder))
    throw InvalidArgument("WaveFunction expansion exceeds the Hermite order limit");
}

WaveFunction WaveFunction::basis(int n, PlanckScale scale, Representation rep) {
  if (n < 0) throw InvalidArgument("basis index must be nonnegative");
  std::vector<Complex> c(n + 1, 0.0);
  c[n] = 1.0;
  return {std::move(c), scale, rep};
}

double WaveFunction::norm_sq() const {
  double s = 0.0;
  for (const auto& c : c_) s += std::norm(c);
  return s;
}

Complex WaveFunction::inner(const WaveFunction& g) const {
  if (g.rep_ != rep_ || !(g.scale_ == scale_)) throw InvalidArgument("inner product of incompatible wave functions");
  Complex s = 0.0;
  for (std::size_t n = 0; n < std::min(c_.size(), g.c_.size()); ++n) s += std::conj(c_[n]) * g.c_[n];
  return s;
}

WaveFunction WaveFunction::normalized() const {
  const double n = std::sqrt(norm_sq());
  if (!(n > 0.0)) throw InvalidArgument("cannot normalize the zero wave function");
  std::vector<Complex> c = c_;
  for (auto& v : c) v /= n;
  return {std::move(c), scale_, rep_};
}

Complex WaveFunction::operator()(double x) const {
  if (rep_ == Representation::GaussianWeight) return gaussian_basis_sum(c_, Complex(x, 0.0), scale_.value());
  Complex out;
  simd::active().hermite_synthesis(c_.data(), c_.size(), &x, 1, scale_.value(), &out);
  return out;
}

Complex WaveFunction::operator()(Complex y) const {
  require(*this, Representation::GaussianWeight, "complex evaluation needs the Gaussian-weight representation");
  return gaussian_basis_sum(c_, y, scale_.value());
}

std::vector<Complex> WaveFunction::evaluate(std::span<const double> xs) const {
  std::vector<Complex> out(xs.size());
  if (rep_ == Representation::Lebesgue) {
    simd::active().hermite_synthesis(c_.data(), c_.size(), xs.data(), xs.size(), scale_.value(), out.data());
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
  }
  return out;
}

WaveFunction WaveFunction::apply(const FockOperator& op) const {
  if (!(op.scale() == scale_)) throw InvalidArgument("operator scale mismatch");
  const int n = op.truncation();
  CVector v = CVector::Zero(n);
  for (int k = 0; k < std::min(n, size()); ++k) v(k) = c_[k];
  CVector w = op.apply(v);
  return {std::vector<Complex>(w.data(), w.data() + n), scale_, rep_};
}

Complex gaussian_basis_sum(std::span<const Complex> c, Complex y, double hbar) {
  const Complex xi = y / std::sqrt(hbar);
  Complex qm = 0.0, q = 1.0, s = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    s += c[n] * q;
    const Complex qn = (xi * q - std::sqrt(double(n)) * qm) / std::sqrt(double(n + 1));
    qm = q;
    q = qn;
  }
  return s;
}

WaveFunction ground_state_transform(const WaveFunction& psi) {
  require(psi, Representation::Lebesgue, "ground-state transform expects a Lebesgue wave function");
  return {psi.coeffs(), psi.scale(), Representation::GaussianWeight};
}

HoloFunction transform_A(const WaveFunction& psi) {
  require(psi, Representation::Lebesgue, "transform_A expects a Lebesgue wave function");
  const double h = psi.scale().value();
  std::vector<Complex> c(psi.size());
  for (int n = 0; n < psi.size(); ++n)
    c[n] = psi.coeffs()[n] * std::exp(-0.5 * (n * std::log(h) + std::lgamma(n + 1.0)));
  return {SpaceSpec::segal_bargmann(h), psi.size() - 1, std::move(c)};
}

QuadratureRule transform_rule(PlanckScale scale, int n) { return gauss_hermite(n, PlanckScale(scale.value() / 2.0)); }

Complex transform_A_integral(const WaveFunction& psi, Complex z, const QuadratureRule& rule) {
  require(psi, Representation::Lebesgue, "transform_A_integral expects a Lebesgue wave function");
  const double h = psi.scale().value();
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.point(i).real();
    vals[i] = std::exp((2.0 * std::sqrt(2.0) * x * z - z * z) / (2.0 * h)) * ground_ratio(psi.coeffs(), x, h);
  }
  return rule.sum(vals);
}

Complex transform_B(const WaveFunction& f, Complex z, const QuadratureRule& rule) {
  require(f, Representation::GaussianWeight, "transform_B expects a Gaussian-weight function");
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) vals[i] = f(z - rule.point(i).real());
  return rule.sum(vals);
}

Complex transform_B_alternate(const WaveFunction& f, Complex z, const QuadratureRule& rule) {
  require(f, Representation::GaussianWeight, "transform_B expects a Gaussian-weight function");
  const double h = f.scale().value();
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.point(i).real();
    vals[i] = std::exp((z * x - z * z / 2.0) / h) * f(x);
  }
  return rule.sum(vals);
}

Complex transform_C(const WaveFunction& psi, Complex z, const QuadratureRule& rule) {
  require(psi, Representation::Lebesgue, "transform_C expects a Lebesgue wave function");
  const double h = psi.scale().value();
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.point(i).real();
    vals[i] = std::exp((2.0 * z * x - z * z) / (2.0 * h)) * ground_ratio(psi.coeffs(), x, h);
  }
  return std::pow(pi * h, -0.25) / std::sqrt(2.0) * rule.sum(vals);
}

Complex transform_C_closed(const WaveFunction& psi, Complex z) {
  const double h = psi.scale().value();
  return std::pow(4.0 * pi * h, -0.25) * std::exp(-z * z / (4.0 * h)) * transform_A(psi)(z / std::sqrt(2.0));
}

Complex transform_C_basis(int n, Complex z, PlanckScale scale) {
  const double h = scale.value();
  const Complex u = z / std::sqrt(2.0);
  const Complex un = n == 0 ? Complex(1.0) : std::pow(u, n);
  return std::pow(4.0 * pi * h, -0.25) * std::exp(-z * z / (4.0 * h)) * un *
         std::exp(-0.5 * (n * std::log(h) + std::lgamma(n + 1.0)));
}

Complex invert_C(const std::function<Complex(Complex)>& c_psi, double x, const QuadratureRule& rule) {
  std::vector<Complex> vals(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) vals[j] = c_psi(Complex(x, rule.point(j).real()));
  return rule.sum(vals);
}

int coherent_truncation(Complex z, PlanckScale scale, double tail) {
  const double lambda = std::norm(z) / (2.0 * scale.value());
  int n = 2;
  while (n < kMaxHermiteOrder && translate_tail_bound(lambda, n - 1) > tail) ++n;
  return n;
}

WaveFunction coherent_state(Complex z, PlanckScale scale, int truncation) {
  if (truncation <= 0) truncation = coherent_truncation(z, scale);
  std::vector<Complex> c(truncation);
  for (int n = 0; n < truncation; ++n) c[n] = std::conj(transform_C_basis(n, z, scale));
  return {std::move(c), scale};
}

Complex coherent_state_value(Complex z, double x, PlanckScale scale) {
  const double h = scale.value();
  const Complex d = std::conj(z) - x;
  return std::exp(-d * d / (2.0 * h)) / std::sqrt(2.0 * pi * h);
}

double husimi_value(const WaveFunction& psi, double x, double p) {
  const double h = psi.scale().value();
  const HoloFunction a = transform_A(psi);
  const Complex w = Complex(x, -p) / std::sqrt(2.0);
  return std::norm(a(w)) * std::exp(-(x * x + p * p) / (2.0 * h)) / (2.0 * pi * h);
}

std::vector<double> husimi(const WaveFunction& psi, std::span<const PhasePoint> grid) {
  require(psi, Representation::Lebesgue, "husimi expects a Lebesgue wave function");
  if (std::abs(psi.norm_sq() - 1.0) > 2e-10) throw InvalidArgument("husimi requires a normalized state");
  const double h = psi.scale().value();
  const HoloFunction a = transform_A(psi);
  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto [x, p] = grid[i];
    const Complex w = Complex(x, -p) / std::sqrt(2.0);
    out[i] = std::norm(a(w)) * std::exp(-(x * x + p * p) / (2.0 * h)) / (2.0 * pi * h);
  });
  return out;
}

double husimi_total_mass(const WaveFunction& psi, int n_p, int n_x, double half_width) {
  const double h = psi.scale().value();
  if (half_width <= 0.0) half_width = std::sqrt(h) * (12.0 + std::sqrt(2.0 * psi.size()));
  const QuadratureRule rp = gauss_hermite(n_p, psi.scale());
  const GaussNodes gx = gauss_legendre_nodes(n_x, -half_width, half_width);
  const HoloFunction a = transform_A(psi);
  // H = |A psi|^2 e^{-x^2/2h} rho_h(p) / sqrt(2 pi h)
  double s = 0.0;
  for (int i = 0; i < n_x; ++i) {
    const double x = gx.x[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < rp.size(); ++j) {
      const double p = rp.point(j).real();
      inner += rp.weight(j) * std::norm(a(Complex(x, -p) / std::sqrt(2.0)));
    }
    s += gx.w[i] * inner * std::exp(-x * x / (2.0 * h));
  }
  return s / std::sqrt(2.0 * pi * h);
}

double resolution_check(const WaveFunction& f, const WaveFunction& g, const QuadratureRule& nu_rule) {
  if (nu_rule.dim() != 1) throw InvalidArgument("resolution_check: one-variable rule expected");
  std::vector<Complex> vals(nu_rule.size());
  for (std::size_t i = 0; i < nu_rule.size(); ++i) {
    const Complex z = nu_rule.point(i);
    vals[i] = std::conj(transform_C_closed(f, z)) * transform_C_closed(g, z);
  }
  return std::abs(nu_rule.sum(vals) - f.inner(g));
}

double cauchy_riemann_residual(const std::function<Complex(Complex)>& f, std::span<const Complex> centers,
                               double h, int points) {
  if (points < 4 || !(h > 0.0)) throw InvalidArgument("cauchy_riemann_residual: bad stencil");
  double worst = 0.0;
  for (const Complex& c : centers) {
    Complex s = 0.0;
    for (int k = 0; k < points; ++k) {
      const Complex w = std::polar(1.0, 2.0 * pi * k / points);
      s += f(c + h * w) * w;
    }
    worst = std::max(worst, std::abs(s) / (points * h));
  }
  return worst;
}

Complex adjoint_kernel(Complex z, Complex w, PlanckScale scale, const QuadratureRule& rule) {
  const double h = scale.value();
  const Complex wb = std::conj(w);
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.point(i).real();
    vals[i] = std::exp((2.0 * std::sqrt(2.0) * x * (z + wb) - z * z - wb * wb) / (2.0 * h));
  }
  return rule.sum(vals);
}

Complex position_moment(const WaveFunction& psi, int k, const QuadratureRule& rule) {
  require(psi, Representation::Lebesgue, "position_moment expects a Lebesgue wave function");
  const double h = psi.scale().value();
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.point(i).real();
    vals[i] = std::pow(x, k) * std::norm(ground_ratio(psi.coeffs(), x, h));
  }
  return rule.sum(vals);
}

}  // namespace holoquant
