#include "holoquant/holospace.hpp"

#include <algorithm>
#include <cmath>

namespace holoquant {

namespace {

constexpr double kDiskTol = 1e-12;

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

// p(z + s)
void taylor_shift(std::vector<Complex>& c, Complex s) {
  const int d = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) c[j] += s * c[j + 1];
}

std::vector<Complex> exp_series(Complex c, int terms) {
  std::vector<Complex> e(terms + 1);
  e[0] = 1.0;
  for (int j = 1; j <= terms; ++j) e[j] = e[j - 1] * c / double(j);
  return e;
}

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

SpaceSpec SpaceSpec::segal_bargmann(double t, int dim) {
  if (!(t > 0.0)) throw InvalidArgument("segal-bargmann: t must be positive");
  if (dim != 1 && dim != 2) throw InvalidArgument("segal-bargmann: dim must be 1 or 2");
  return {SpaceKind::SegalBargmann, t, dim};
}
SpaceSpec SpaceSpec::bergman() { return {SpaceKind::Bergman, 0.0, 1}; }
SpaceSpec SpaceSpec::weighted_bergman(double a) {
  if (!(a > -1.0)) throw InvalidArgument("weighted bergman: a must exceed -1");
  return {SpaceKind::WeightedBergman, a, 1};
}
SpaceSpec SpaceSpec::hardy() { return {SpaceKind::Hardy, 0.0, 1}; }
SpaceSpec SpaceSpec::invariant_gaussian(double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("invariant gaussian: hbar must be positive");
  return {SpaceKind::InvariantGaussian, hbar, 1};
}

bool SpaceSpec::is_disk() const {
  return kind_ == SpaceKind::Bergman || kind_ == SpaceKind::WeightedBergman || kind_ == SpaceKind::Hardy;
}

double SpaceSpec::log_monomial_norm_sq(int n) const {
  if (n < 0) throw InvalidArgument("monomial degree must be nonnegative");
  switch (kind_) {
    case SpaceKind::SegalBargmann:
      return std::lgamma(n + 1.0) + n * std::log(param_);
    case SpaceKind::Bergman:
      return std::log(pi) - std::log(n + 1.0);
    case SpaceKind::WeightedBergman:
      return std::log(pi) + std::lgamma(n + 1.0) + std::lgamma(param_ + 1.0) - std::lgamma(n + param_ + 2.0);
    case SpaceKind::Hardy:
      return std::log(2.0 * pi);
    case SpaceKind::InvariantGaussian:
      break;
  }
  throw UnsupportedOperation("monomials are not orthogonal in this space");
}

double SpaceSpec::monomial_norm_sq(int n) const { return std::exp(log_monomial_norm_sq(n)); }

void SpaceSpec::check_point(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim_) throw InvalidArgument("point dimension mismatch");
  if (!is_disk()) return;
  const double r = std::abs(z[0]);
  if (kind_ == SpaceKind::Hardy ? r > 1.0 + kDiskTol : r >= 1.0)
    throw InvalidArgument("point outside the unit disk");
}

HoloFunction::HoloFunction(SpaceSpec space, int degree, std::vector<Complex> coeffs)
    : space_(space), degree_(degree), c_(std::move(coeffs)) {
  if (degree_ < 0) throw InvalidArgument("HoloFunction degree must be nonnegative");
  std::size_t expect = degree_ + 1;
  if (space_.dim() == 2) expect *= degree_ + 1;
  if (c_.size() != expect) throw InvalidArgument("HoloFunction coefficient count mismatch");
}

HoloFunction HoloFunction::zero(SpaceSpec space, int degree) {
  const std::size_t n = space.dim() == 2 ? (degree + 1) * (degree + 1) : degree + 1;
  return {space, degree, std::vector<Complex>(n, 0.0)};
}

HoloFunction HoloFunction::monomial(SpaceSpec space, int n) {
  if (space.dim() != 1) throw InvalidArgument("monomial(n) needs a one-variable space");
  auto f = zero(space, n);
  f.c_[n] = 1.0;
  return f;
}

HoloFunction HoloFunction::monomial(SpaceSpec space, int i, int j) {
  if (space.dim() != 2) throw InvalidArgument("monomial(i, j) needs a two-variable space");
  const int d = std::max(i, j);
  auto f = zero(space, d);
  f.c_[i * (d + 1) + j] = 1.0;
  return f;
}

Complex HoloFunction::coeff(int n) const {
  if (dim() != 1) throw InvalidArgument("coeff(n) on a two-variable function");
  return n >= 0 && n <= degree_ ? c_[n] : Complex(0.0);
}

Complex HoloFunction::coeff(int i, int j) const {
  if (dim() != 2) throw InvalidArgument("coeff(i, j) on a one-variable function");
  if (i < 0 || j < 0 || i > degree_ || j > degree_) return 0.0;
  return c_[i * (degree_ + 1) + j];
}

Complex HoloFunction::operator()(Complex z) const {
  if (dim() != 1) throw InvalidArgument("scalar evaluation of a two-variable function");
  return horner(c_, z);
}

Complex HoloFunction::operator()(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim()) throw InvalidArgument("point dimension mismatch");
  if (dim() == 1) return horner(c_, z[0]);
  const int n = degree_ + 1;
  Complex s = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Complex> row(c_.begin() + i * n, c_.begin() + (i + 1) * n);
    s = s * z[0] + horner(row, z[1]);
  }
  return s;
}

double HoloFunction::norm_sq() const {
  double s = 0.0;
  if (dim() == 1) {
    for (int n = 0; n <= degree_; ++n)
      if (c_[n] != 0.0) s += std::norm(c_[n]) * space_.monomial_norm_sq(n);
  } else {
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; j <= degree_; ++j) {
        const Complex c = coeff(i, j);
        if (c != 0.0) s += std::norm(c) * space_.monomial_norm_sq(i) * space_.monomial_norm_sq(j);
      }
  }
  return s;
}

double HoloFunction::norm() const { return std::sqrt(norm_sq()); }

Complex HoloFunction::inner(const HoloFunction& g) const {
  if (g.dim() != dim()) throw InvalidArgument("inner product dimension mismatch");
  Complex s = 0.0;
  const int d = std::min(degree_, g.degree_);
  if (dim() == 1) {
    for (int n = 0; n <= d; ++n) s += std::conj(c_[n]) * g.c_[n] * space_.monomial_norm_sq(n);
  } else {
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        s += std::conj(coeff(i, j)) * g.coeff(i, j) * space_.monomial_norm_sq(i) * space_.monomial_norm_sq(j);
  }
  return s;
}

HoloFunction HoloFunction::resized(int degree) const {
  HoloFunction out = zero(space_, degree);
  if (dim() == 1) {
    for (int n = 0; n <= std::min(degree, degree_); ++n) out.c_[n] = c_[n];
  } else {
    for (int i = 0; i <= std::min(degree, degree_); ++i)
      for (int j = 0; j <= std::min(degree, degree_); ++j) out.c_[i * (degree + 1) + j] = coeff(i, j);
  }
  return out;
}

HoloFunction HoloFunction::operator+(const HoloFunction& g) const {
  const int d = std::max(degree_, g.degree_);
  HoloFunction a = resized(d), b = g.resized(d);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

HoloFunction HoloFunction::operator-(const HoloFunction& g) const { return *this + g * Complex(-1.0); }

HoloFunction HoloFunction::operator*(Complex s) const {
  HoloFunction out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

HoloFunction HoloFunction::derivative() const {
  if (dim() != 1) throw InvalidArgument("derivative of a two-variable function");
  HoloFunction out = zero(space_, std::max(degree_ - 1, 0));
  for (int n = 1; n <= degree_; ++n) out.c_[n - 1] = double(n) * c_[n];
  return out;
}

double HoloFunction::max_coeff_diff(const HoloFunction& g) const {
  const int d = std::max(degree_, g.degree_);
  HoloFunction a = resized(d), b = g.resized(d);
  double m = 0.0;
  for (std::size_t i = 0; i < a.c_.size(); ++i) m = std::max(m, std::abs(a.c_[i] - b.c_[i]));
  return m;
}

Complex kernel(const SpaceSpec& space, std::span<const Complex> z, std::span<const Complex> w) {
  space.check_point(z);
  space.check_point(w);
  switch (space.kind()) {
    case SpaceKind::SegalBargmann: {
      Complex s = 0.0;
      for (int k = 0; k < space.dim(); ++k) s += z[k] * std::conj(w[k]);
      return std::exp(s / space.param());
    }
    case SpaceKind::Bergman: {
      const Complex d = 1.0 - z[0] * std::conj(w[0]);
      return 1.0 / (pi * d * d);
    }
    case SpaceKind::WeightedBergman: {
      const double a = space.param();
      return (a + 1.0) / pi * std::pow(1.0 - z[0] * std::conj(w[0]), -(a + 2.0));
    }
    case SpaceKind::Hardy: {
      const Complex zw = z[0] * std::conj(w[0]);
      if (std::abs(zw) >= 1.0) throw InvalidArgument("hardy kernel needs |z w| < 1");
      return 1.0 / (2.0 * pi * (1.0 - zw));
    }
    case SpaceKind::InvariantGaussian: {
      const double h = space.param();
      const Complex d = z[0] - std::conj(w[0]);
      return std::pow(4.0 * pi * h, -0.5) * std::exp(-d * d / (4.0 * h));
    }
  }
  return 0.0;
}

Complex kernel(const SpaceSpec& space, Complex z, Complex w) {
  return kernel(space, std::span<const Complex>(&z, 1), std::span<const Complex>(&w, 1));
}

Complex kernel_from_basis(const SpaceSpec& space, std::span<const Complex> z,
                          std::span<const Complex> w, int m) {
  if (m < 0) throw InvalidArgument("basis truncation must be nonnegative");
  space.check_point(z);
  space.check_point(w);
  if (space.kind() == SpaceKind::InvariantGaussian) {
    // e_n(z) = (4 pi hbar)^(-1/4) e^{-z^2/4hbar} (z/sqrt2)^n / sqrt(hbar^n n!)
    const double h = space.param();
    const Complex u = z[0] * std::conj(w[0]) / (2.0 * h);
    Complex term = 1.0, s = 0.0;
    for (int n = 0; n <= m; ++n) {
      s += term;
      term *= u / double(n + 1);
    }
    const Complex zz = z[0] * z[0] + std::conj(w[0] * w[0]);
    return std::pow(4.0 * pi * h, -0.5) * std::exp(-zz / (4.0 * h)) * s;
  }
  Complex total = 1.0;
  for (int k = 0; k < space.dim(); ++k) {
    const Complex u = z[k] * std::conj(w[k]);
    Complex s = 0.0, un = 1.0;
    for (int n = 0; n <= m; ++n) {
      s += un / space.monomial_norm_sq(n);
      un *= u;
    }
    total *= s;
  }
  return total;
}

Complex kernel_from_basis(const SpaceSpec& space, Complex z, Complex w, int m) {
  return kernel_from_basis(space, std::span<const Complex>(&z, 1), std::span<const Complex>(&w, 1), m);
}

HoloFunction coherent_function(const SpaceSpec& space, Complex z, int m) {
  if (space.dim() != 1) throw InvalidArgument("coherent_function: one-variable spaces only");
  space.check_point(std::span<const Complex>(&z, 1));
  std::vector<Complex> c(m + 1);
  Complex zn = 1.0;
  for (int n = 0; n <= m; ++n) {
    c[n] = zn / space.monomial_norm_sq(n);
    zn *= std::conj(z);
  }
  return {space, m, std::move(c)};
}

PointwiseBound pointwise_bound_check(const SpaceSpec& space, const HoloFunction& f, Complex z) {
  const double nf = f.norm_sq();
  if (!(nf > 0.0)) throw InvalidArgument("pointwise bound needs a nonzero function");
  const double k = kernel(space, z, z).real();
  const double ratio = std::norm(f(z)) / (k * nf);
  return {ratio, ratio <= 1.0 + 1e-10};
}

Complex project(const SpaceSpec& space, const std::function<Complex(Complex)>& g, Complex z,
                const QuadratureRule& rule) {
  if (rule.dim() != 1) throw InvalidArgument("project: one-variable rule expected");
  std::vector<Complex> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex w = rule.point(i);
    vals[i] = kernel(space, z, w) * g(w);
  }
  return rule.sum(vals);
}

Complex reproduce(const SpaceSpec& space, const HoloFunction& f, Complex z, const QuadratureRule& rule) {
  return project(space, [&](Complex w) { return f(w); }, z, rule);
}

double quadrature_norm_sq(const HoloFunction& f, const QuadratureRule& rule) {
  if (rule.dim() != static_cast<std::size_t>(f.dim())) throw InvalidArgument("rule dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weight(i) * std::norm(f(rule.node(i)));
  return s;
}

double translate_tail_bound(double lambda, int terms) {
  if (lambda <= 0.0) return 0.0;
  // sum_{j > terms} e^{-lambda} lambda^j / j!
  double log_term = -lambda + (terms + 1) * std::log(lambda) - std::lgamma(terms + 2.0);
  double term = std::exp(log_term), s = 0.0;
  for (int j = terms + 1; j < terms + 10000 && term > 1e-300; ++j) {
    s += term;
    term *= lambda / (j + 1);
  }
  return s;
}

int translate_series_terms(double lambda, const TranslateOptions& opt) {
  if (lambda <= 0.0) return 0;
  int k = static_cast<int>(std::ceil(opt.growth * lambda));
  int floor_k = 0;
  while (translate_tail_bound(lambda, floor_k) > opt.tail_target) ++floor_k;
  return std::max(k, floor_k);
}

HoloFunction translate(std::span<const Complex> a, const HoloFunction& f, PlanckScale t,
                       const TranslateOptions& opt) {
  const SpaceSpec& sp = f.space();
  if (sp.kind() != SpaceKind::SegalBargmann) throw UnsupportedOperation("translate needs a Segal-Bargmann space");
  if (static_cast<int>(a.size()) != sp.dim()) throw InvalidArgument("translate: shift dimension mismatch");
  const double tv = t.value();
  double a2 = 0.0;
  int extra = 0;
  for (const Complex& ak : a) {
    a2 += std::norm(ak);
    extra = std::max(extra, translate_series_terms(std::norm(ak) / tv, opt));
  }
  const int d_in = f.degree();
  const int d_out = d_in + extra;
  const double scale = std::exp(-a2 / (2.0 * tv));
  if (sp.dim() == 1) {
    std::vector<Complex> g = f.coeffs();
    taylor_shift(g, -a[0]);
    std::vector<Complex> out = poly_mul(g, exp_series(std::conj(a[0]) / tv, extra));
    for (auto& c : out) c *= scale;
    return {sp, d_out, std::move(out)};
  }
  // two variables: shift and multiply along each axis
  const int n_in = d_in + 1, n_out = d_out + 1;
  std::vector<Complex> grid(n_out * n_out, 0.0);
  for (int i = 0; i < n_in; ++i)
    for (int j = 0; j < n_in; ++j) grid[i * n_out + j] = f.coeff(i, j);
  const auto e0 = exp_series(std::conj(a[0]) / tv, extra);
  const auto e1 = exp_series(std::conj(a[1]) / tv, extra);
  for (int i = 0; i < n_in; ++i) {
    std::vector<Complex> row(grid.begin() + i * n_out, grid.begin() + i * n_out + n_in);
    taylor_shift(row, -a[1]);
    auto prod = poly_mul(row, e1);
    for (int j = 0; j < n_out; ++j) grid[i * n_out + j] = prod[j];
  }
  for (int j = 0; j < n_out; ++j) {
    std::vector<Complex> col(n_in);
    for (int i = 0; i < n_in; ++i) col[i] = grid[i * n_out + j];
    taylor_shift(col, -a[0]);
    auto prod = poly_mul(col, e0);
    for (int i = 0; i < n_out; ++i) grid[i * n_out + j] = prod[i] * scale;
  }
  return {sp, d_out, std::move(grid)};
}

HoloFunction translate(Complex a, const HoloFunction& f, PlanckScale t, const TranslateOptions& opt) {
  return translate(std::span<const Complex>(&a, 1), f, t, opt);
}

Su11Element su11_from_matrix(const Complex m[2][2]) {
  const Complex a = m[0][0], b = m[0][1];
  const double tol = 1e-12;
  if (std::abs(m[1][0] - std::conj(b)) > tol || std::abs(m[1][1] - std::conj(a)) > tol ||
      std::abs(std::norm(a) - std::norm(b) - 1.0) > tol)
    throw InvalidArgument("matrix is not in SU(1,1)");
  return {a, b};
}

Su11Element su11_compose(const Su11Element& g, const Su11Element& h) {
  return {g.alpha * h.alpha + g.beta * std::conj(h.beta), g.alpha * h.beta + g.beta * std::conj(h.alpha)};
}

HoloFunction su11_act(const Su11Element& g, const HoloFunction& f, double a, int out_degree) {
  const SpaceSpec& sp = f.space();
  if (!(a > -1.0)) throw InvalidArgument("su11_act: weight must exceed -1");
  if (sp.dim() != 1 || !sp.is_disk()) throw UnsupportedOperation("su11_act needs a disk space");
  if (std::abs(std::norm(g.alpha) - std::norm(g.beta) - 1.0) > 1e-12)
    throw InvalidArgument("element is not in SU(1,1)");
  const double ratio = std::abs(g.beta) / std::abs(g.alpha);
  if (out_degree < 0) {
    const int decay = ratio < 1e-300 ? 0 : static_cast<int>(std::ceil(std::log(1e-18) / std::log(ratio)));
    out_degree = std::min(f.degree() + std::max(decay, 0) + 8, 2048);
  }
  const int n = std::max(256, 4 * (out_degree + 1));
  const Complex e = -(a + 2.0);
  const Complex lead = std::exp(e * std::log(g.alpha));
  const Complex bq = std::conj(g.beta) / g.alpha;
  std::vector<Complex> samples(n);
  for (int k = 0; k < n; ++k) {
    const Complex z = std::polar(1.0, 2.0 * pi * k / n);
    const Complex w = (std::conj(g.alpha) * z - g.beta) / (-std::conj(g.beta) * z + g.alpha);
    samples[k] = lead * std::exp(e * std::log(1.0 - bq * z)) * f(w);
  }
  std::vector<Complex> c(out_degree + 1);
  for (int m = 0; m <= out_degree; ++m) {
    Complex s = 0.0;
    for (int k = 0; k < n; ++k) s += samples[k] * std::polar(1.0, -2.0 * pi * double((long(k) * m) % n) / n);
    c[m] = s / double(n);
  }
  return {sp, out_degree, std::move(c)};
}

Complex Multiplier::operator()(Complex z) const {
  return horner(poly, z) * std::exp(horner(exponent, z));
}

Multiplier Multiplier::constant(Complex c) { return {{c}, {}}; }

Multiplier Multiplier::exp_poly(Complex c, std::vector<Complex> q) { return {{c}, std::move(q)}; }

double EquivalentFunction::norm_sq(const QuadratureRule& target) const {
  if (target.dim() != 1) throw InvalidArgument("one-variable rule expected");
  double s = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) s += target.weight(i) * std::norm((*this)(target.point(i)));
  return s;
}

EquivalentFunction holo_equiv(const Multiplier& phi, const HoloFunction& f, const QuadratureRule& rule) {
  if (f.dim() != 1) throw InvalidArgument("holo_equiv: one-variable functions only");
  for (std::size_t i = 0; i < rule.size(); ++i)
    if (phi(rule.point(i)) == 0.0) throw DegenerateEquivalence("multiplier vanishes at a quadrature node");
  return {phi, f};
}

double log_modulus_laplacian(const Multiplier& phi, Complex z, double h) {
  auto lg = [&](Complex w) { return std::log(std::norm(phi(w))); };
  return (lg(z + h) + lg(z - h) + lg(z + Complex(0, h)) + lg(z - Complex(0, h)) - 4.0 * lg(z)) / (h * h);
}

}  // namespace holoquant
