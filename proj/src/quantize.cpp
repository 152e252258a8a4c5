#include "holoquant/quantize.hpp"

#include <algorithm>
#include <cmath>

namespace holoquant {

// ---- PhaseSymbol ----

PhaseSymbol::PhaseSymbol(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("symbol dimension must be >= 1");
}

PhaseSymbol PhaseSymbol::constant(Complex c, int dim) {
  PhaseSymbol s(dim);
  s.add_term(Key(2 * dim, 0), c);
  return s;
}

PhaseSymbol PhaseSymbol::monomial(int n, int m, Complex c) { return monomial(Key{n, m}, c); }

PhaseSymbol PhaseSymbol::monomial(Key key, Complex c) {
  if (key.empty() || key.size() % 2) throw InvalidArgument("monomial key must have even length");
  PhaseSymbol s(static_cast<int>(key.size() / 2));
  s.add_term(key, c);
  return s;
}

PhaseSymbol PhaseSymbol::x(int k, int dim) {
  Key key(2 * dim, 0);
  key.at(k) = 1;
  return monomial(key);
}

PhaseSymbol PhaseSymbol::p(int k, int dim) {
  Key key(2 * dim, 0);
  key.at(dim + k) = 1;
  return monomial(key);
}

void PhaseSymbol::check_key(const Key& key) const {
  if (static_cast<int>(key.size()) != 2 * dim_) throw InvalidArgument("symbol key dimension mismatch");
  for (int e : key)
    if (e < 0) throw InvalidArgument("negative exponent");
}

Complex PhaseSymbol::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

void PhaseSymbol::add_term(const Key& key, Complex c) {
  check_key(key);
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int PhaseSymbol::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool PhaseSymbol::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.imag() == 0.0; });
}

PhaseSymbol PhaseSymbol::operator+(const PhaseSymbol& g) const {
  if (g.dim_ != dim_) throw InvalidArgument("symbol dimension mismatch");
  PhaseSymbol out = *this;
  for (const auto& [k, c] : g.terms_) out.add_term(k, c);
  return out;
}

PhaseSymbol PhaseSymbol::operator-(const PhaseSymbol& g) const { return *this + g * Complex(-1.0); }

PhaseSymbol PhaseSymbol::operator*(const PhaseSymbol& g) const {
  if (g.dim_ != dim_) throw InvalidArgument("symbol dimension mismatch");
  PhaseSymbol out(dim_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : g.terms_) {
      Key k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out.add_term(k, ca * cb);
    }
  return out;
}

PhaseSymbol PhaseSymbol::operator*(Complex s) const {
  PhaseSymbol out(dim_);
  for (const auto& [k, c] : terms_) out.add_term(k, c * s);
  return out;
}

bool PhaseSymbol::operator==(const PhaseSymbol& g) const { return dim_ == g.dim_ && terms_ == g.terms_; }

namespace {

PhaseSymbol differentiate(const PhaseSymbol& f, int slot) {
  PhaseSymbol out(f.dim());
  for (const auto& [k, c] : f.terms()) {
    if (k[slot] == 0) continue;
    auto key = k;
    key[slot] -= 1;
    out.add_term(key, c * double(k[slot]));
  }
  return out;
}

}  // namespace

PhaseSymbol PhaseSymbol::d_x(int k) const {
  if (k < 0 || k >= dim_) throw InvalidArgument("coordinate index out of range");
  return differentiate(*this, k);
}

PhaseSymbol PhaseSymbol::d_p(int k) const {
  if (k < 0 || k >= dim_) throw InvalidArgument("coordinate index out of range");
  return differentiate(*this, dim_ + k);
}

Complex PhaseSymbol::operator()(std::span<const double> x, std::span<const double> p) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(p.size()) != dim_)
    throw InvalidArgument("evaluation point dimension mismatch");
  Complex s = 0.0;
  for (const auto& [k, c] : terms_) {
    double v = 1.0;
    for (int i = 0; i < dim_; ++i) v *= std::pow(x[i], k[i]) * std::pow(p[i], k[dim_ + i]);
    s += c * v;
  }
  return s;
}

Complex PhaseSymbol::operator()(double x, double p) const {
  return (*this)(std::span<const double>(&x, 1), std::span<const double>(&p, 1));
}

double PhaseSymbol::max_abs_diff(const PhaseSymbol& g) const {
  const PhaseSymbol d = *this - g;
  double m = 0.0;
  for (const auto& [k, c] : d.terms()) m = std::max(m, std::abs(c));
  return m;
}

PhaseSymbol poisson(const PhaseSymbol& f, const PhaseSymbol& g) {
  if (f.dim() != g.dim()) throw InvalidArgument("poisson: dimension mismatch");
  PhaseSymbol out(f.dim());
  for (int k = 0; k < f.dim(); ++k) out = out + f.d_x(k) * g.d_p(k) - f.d_p(k) * g.d_x(k);
  return out;
}

PhaseSymbol laplacian(const PhaseSymbol& f) {
  PhaseSymbol out(f.dim());
  for (int k = 0; k < f.dim(); ++k) out = out + f.d_x(k).d_x(k) + f.d_p(k).d_p(k);
  return out;
}

PhaseSymbol heat_smooth(const PhaseSymbol& f, PlanckScale scale) {
  PhaseSymbol out = f, term = f;
  for (int k = 1; !term.empty(); ++k) {
    term = laplacian(term) * Complex(scale.value() / (4.0 * k));
    out = out + term;
  }
  return out;
}

// ---- quantization ----

const char* scheme_name(OrderingScheme s) {
  switch (s) {
    case OrderingScheme::PDOStandard: return "pdo";
    case OrderingScheme::PDOReverse: return "pdo-reverse";
    case OrderingScheme::Weyl: return "weyl";
    case OrderingScheme::Wick: return "wick";
    case OrderingScheme::AntiWick: return "anti-wick";
  }
  return "?";
}

OrderingScheme scheme_from_name(const std::string& name) {
  for (OrderingScheme s : kAllSchemes)
    if (name == scheme_name(s)) return s;
  if (name == "antiwick") return OrderingScheme::AntiWick;
  if (name == "pdo-standard") return OrderingScheme::PDOStandard;
  throw InvalidArgument("unknown ordering scheme: " + name);
}

namespace {

class MonomialQuantizer {
 public:
  explicit MonomialQuantizer(const HermiteBasisSpec& spec) : n_(spec.truncation) {
    const auto [x, p] = position_momentum(spec);
    const Complex i(0.0, 1.0);
    base_ = {x.entries(), p.entries(), x.entries() - i * p.entries(), x.entries() + i * p.entries()};
    powers_.resize(4);
  }

  CMatrix operator()(OrderingScheme scheme, int n, int m) {
    switch (scheme) {
      case OrderingScheme::PDOStandard:
        return matmul(power(0, n), power(1, m));
      case OrderingScheme::PDOReverse:
        return matmul(power(1, m), power(0, n));
      case OrderingScheme::Weyl:
        return weyl(n, m);
      case OrderingScheme::Wick:
      case OrderingScheme::AntiWick:
        return normal(scheme == OrderingScheme::Wick, n, m);
    }
    throw InvalidArgument("unknown ordering scheme");
  }

 private:
  // 0: X, 1: P, 2: X - iP, 3: X + iP
  const CMatrix& power(int which, int k) {
    auto& v = powers_[which];
    if (v.empty()) v.push_back(CMatrix::Identity(n_, n_));
    while (static_cast<int>(v.size()) <= k) v.push_back(matmul(v.back(), base_[which]));
    return v[k];
  }

  CMatrix weyl(int n, int m) {
    if (n == 0 || m == 0) return n == 0 ? power(1, m) : power(0, n);
    std::vector<int> word(n + m, 0);
    std::fill(word.begin() + n, word.end(), 1);  // sorted: X's then P's
    CMatrix sum = CMatrix::Zero(n_, n_);
    long count = 0;
    do {
      CMatrix prod = base_[word[0]];
      for (std::size_t j = 1; j < word.size(); ++j) prod = matmul(prod, base_[word[j]]);
      sum += prod;
      ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return sum / double(count);
  }

  // x^n p^m = sum c_jk w^j wbar^k with w = x - ip, wbar = x + ip
  CMatrix normal(bool wick, int n, int m) {
    const int d = n + m;
    std::vector<std::vector<Complex>> c(d + 1, std::vector<Complex>(d + 1, 0.0));
    c[0][0] = 1.0;
    auto mul = [&](Complex cw, Complex cwb) {
      std::vector<std::vector<Complex>> out(d + 1, std::vector<Complex>(d + 1, 0.0));
      for (int j = 0; j <= d; ++j)
        for (int k = 0; j + k <= d; ++k) {
          if (c[j][k] == 0.0) continue;
          if (j + 1 <= d) out[j + 1][k] += c[j][k] * cw;
          if (k + 1 <= d) out[j][k + 1] += c[j][k] * cwb;
        }
      c = std::move(out);
    };
    for (int r = 0; r < n; ++r) mul(0.5, 0.5);
    for (int r = 0; r < m; ++r) mul(Complex(0, 0.5), Complex(0, -0.5));
    CMatrix sum = CMatrix::Zero(n_, n_);
    for (int j = 0; j <= d; ++j)
      for (int k = 0; j + k <= d; ++k) {
        if (c[j][k] == 0.0) continue;
        sum += c[j][k] * (wick ? matmul(power(2, j), power(3, k)) : matmul(power(3, k), power(2, j)));
      }
    return sum;
  }

  int n_;
  std::vector<CMatrix> base_;
  std::vector<std::vector<CMatrix>> powers_;
};

}  // namespace

FockOperator quantize(OrderingScheme scheme, const PhaseSymbol& f, const HermiteBasisSpec& spec, int min_block) {
  const int n = spec.truncation;
  if (f.dim() > 2) throw UnsupportedOperation("quantize supports at most two degrees of freedom");
  const int block = exact_block(n, std::max(f.degree(), 0));
  if (block < min_block)
    throw InsufficientTruncation("truncation " + std::to_string(n) + " leaves an exact block of " +
                                 std::to_string(block) + ", need " + std::to_string(min_block));
  MonomialQuantizer q(spec);
  if (f.dim() == 1) {
    CMatrix sum = CMatrix::Zero(n, n);
    for (const auto& [k, c] : f.terms()) sum += c * q(scheme, k[0], k[1]);
    return {sum, spec.scale};
  }
  CMatrix sum = CMatrix::Zero(n * n, n * n);
  for (const auto& [k, c] : f.terms()) {
    const FockOperator a(q(scheme, k[0], k[2]), spec.scale);
    const FockOperator b(q(scheme, k[1], k[3]), spec.scale);
    sum += c * kron(a, b).entries();
  }
  return {sum, spec.scale};
}

BracketReport commutator_vs_poisson(const PhaseSymbol& f, const PhaseSymbol& g, const HermiteBasisSpec& spec,
                                    OrderingScheme scheme) {
  if (f.dim() != 1 || g.dim() != 1) throw UnsupportedOperation("commutator_vs_poisson: one degree of freedom");
  const int deg = std::max(f.degree(), 0) + std::max(g.degree(), 0);
  BracketReport r;
  r.block = exact_block(spec.truncation, deg);
  if (r.block < 1) throw InsufficientTruncation("truncation too small for the bracket comparison");
  const FockOperator qf = quantize(scheme, f, spec), qg = quantize(scheme, g, spec);
  const CMatrix comm = commutator(qf, qg).entries() / Complex(0.0, spec.scale.value());
  const CMatrix cl = quantize(scheme, poisson(f, g), spec).entries();
  r.quantum = comm.topLeftCorner(r.block, r.block);
  r.classical = cl.topLeftCorner(r.block, r.block);
  r.discrepancy = r.quantum - r.classical;
  r.max_abs = max_abs_block(r.discrepancy, r.block);
  return r;
}

Complex weyl_moment(const WaveFunction& psi, const PhaseSymbol& f) {
  if (psi.representation() != Representation::Lebesgue) throw InvalidArgument("weyl_moment expects a Lebesgue state");
  if (f.dim() != 1) throw UnsupportedOperation("weyl_moment: one degree of freedom");
  const int k = psi.size();
  const int n = std::max(2, k + (std::max(f.degree(), 0) + 1) / 2 + 1);
  const FockOperator q = quantize(OrderingScheme::Weyl, f, HermiteBasisSpec(n, psi.scale()));
  CVector v = CVector::Zero(n);
  for (int i = 0; i < k; ++i) v(i) = psi.coeffs()[i];
  return v.dot(q.apply(v));
}

Complex husimi_moment(const WaveFunction& psi, const PhaseSymbol& f, int n_nodes) {
  if (psi.representation() != Representation::Lebesgue) throw InvalidArgument("husimi_moment expects a Lebesgue state");
  if (f.dim() != 1) throw UnsupportedOperation("husimi_moment: one degree of freedom");
  if (n_nodes <= 0) n_nodes = (std::max(f.degree(), 0) + 2 * (psi.size() - 1)) / 2 + 2;
  const QuadratureRule r = gauss_hermite(n_nodes, psi.scale());
  const HoloFunction a = transform_A(psi);
  Complex s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double x = r.point(i).real(), p = r.point(j).real();
      s += r.weight(i) * r.weight(j) * f(x, p) * std::norm(a(Complex(x, -p) / std::sqrt(2.0)));
    }
  return s;
}

// ---- Toeplitz ----

SBSymbol SBSymbol::monomial(int a, int b, Complex c) {
  SBSymbol s;
  s.add_term({a, b}, c);
  return s;
}

void SBSymbol::add_term(Key key, Complex c) {
  if (key.first < 0 || key.second < 0) throw InvalidArgument("negative exponent");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int SBSymbol::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

int SBSymbol::z_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

SBSymbol SBSymbol::operator+(const SBSymbol& g) const {
  SBSymbol out = *this;
  for (const auto& [k, c] : g.terms_) out.add_term(k, c);
  return out;
}

SBSymbol SBSymbol::operator*(const SBSymbol& g) const {
  SBSymbol out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : g.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

SBSymbol SBSymbol::operator*(Complex s) const {
  SBSymbol out;
  for (const auto& [k, c] : terms_) out.add_term(k, c * s);
  return out;
}

Complex SBSymbol::operator()(Complex z) const {
  Complex s = 0.0;
  for (const auto& [k, c] : terms_) s += c * std::pow(z, k.first) * std::pow(std::conj(z), k.second);
  return s;
}

SBSymbol bridge_symbol(const PhaseSymbol& f) {
  if (f.dim() != 1) throw UnsupportedOperation("bridge_symbol: one degree of freedom");
  const double r = 1.0 / std::sqrt(2.0);
  const SBSymbol x = SBSymbol::monomial(1, 0, r) + SBSymbol::monomial(0, 1, r);
  const SBSymbol p = SBSymbol::monomial(1, 0, Complex(0, r)) + SBSymbol::monomial(0, 1, Complex(0, -r));
  SBSymbol out;
  for (const auto& [k, c] : f.terms()) {
    SBSymbol term = SBSymbol::monomial(0, 0, c);
    for (int i = 0; i < k[0]; ++i) term = term * x;
    for (int i = 0; i < k[1]; ++i) term = term * p;
    out = out + term;
  }
  return out;
}

FockOperator toeplitz(const SBSymbol& phi, int m, PlanckScale t) {
  if (m < 2) throw InvalidArgument("toeplitz: truncation must be >= 2");
  const double tv = t.value();
  CMatrix out = CMatrix::Zero(m, m);
  // conj(z)^b z^a -> (t d/dz)^b z^a; products kept in integers where possible
  for (const auto& [key, c] : phi.terms()) {
    const auto [a, b] = key;
    for (int n = 0; n < m; ++n) {
      const int k = n + a - b;
      if (k < 0 || k >= m) continue;
      if (n + a > 150) {
        const double lt = std::log(tv);
        out(k, n) += c * std::exp(b * lt + std::lgamma(n + a + 1.0) - std::lgamma(k + 1.0) +
                                  0.5 * (k - n) * lt + 0.5 * (std::lgamma(k + 1.0) - std::lgamma(n + 1.0)));
        continue;
      }
      double v = 1.0;
      for (int j = 0; j < b; ++j) v *= tv;
      for (int j = k + 1; j <= n + a; ++j) v *= j;
      double r = 1.0;
      for (int j = std::min(k, n) + 1; j <= std::max(k, n); ++j) r *= tv * j;
      if (k > n) v *= std::sqrt(r);
      else if (k < n) v /= std::sqrt(r);
      out(k, n) += c * v;
    }
  }
  return {out, t};
}

FockOperator toeplitz_quadrature(const SBSymbol& phi, int m, PlanckScale t, int nodes) {
  if (m < 2) throw InvalidArgument("toeplitz: truncation must be >= 2");
  if (nodes <= 0) nodes = (2 * (m - 1) + std::max(phi.degree(), 0)) / 2 + 2;
  const QuadratureRule rule = complex_gaussian(nodes, t, GaussianWeight::Mu);
  CMatrix out = CMatrix::Zero(m, m);
  std::vector<Complex> u(m);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex z = rule.point(i);
    u[0] = 1.0;
    for (int n = 1; n < m; ++n) u[n] = u[n - 1] * z / std::sqrt(t.value() * n);
    const Complex w = rule.weight(i) * phi(z);
    for (int n = 0; n < m; ++n)
      for (int k = 0; k < m; ++k) out(k, n) += w * std::conj(u[k]) * u[n];
  }
  return {out, t};
}

double antiwick_toeplitz_bridge(const PhaseSymbol& f, const HermiteBasisSpec& spec) {
  const int n = spec.truncation;
  const double h = spec.scale.value();
  const FockOperator t = toeplitz(bridge_symbol(f), n, spec.scale);
  // coefficient-level A: column j holds the orthonormal-monomial coefficients of A e_j
  CMatrix a = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const HoloFunction img = transform_A(WaveFunction::basis(j, spec.scale));
    for (int k = 0; k <= img.degree(); ++k)
      a(k, j) = img.coeff(k) * std::exp(0.5 * (k * std::log(h) + std::lgamma(k + 1.0)));
  }
  const CMatrix conj = a.inverse() * matmul(t.entries(), a);
  const CMatrix q = quantize(OrderingScheme::AntiWick, f, spec).entries();
  return max_abs_block(conj - q, exact_block(n, std::max(f.degree(), 0)));
}

CoherentFormReport toeplitz_coherent_form(const SBSymbol& phi, const HoloFunction& f, const HoloFunction& g,
                                          const QuadratureRule& rule) {
  const SpaceSpec& sp = f.space();
  if (sp.kind() != SpaceKind::SegalBargmann || sp.dim() != 1 || g.space().kind() != SpaceKind::SegalBargmann)
    throw UnsupportedOperation("toeplitz_coherent_form needs one-variable Segal-Bargmann functions");
  const double t = sp.param();
  const int m = std::max({f.degree(), g.degree(), 1}) + 1;
  auto orthonormal = [&](const HoloFunction& h) {
    CVector v = CVector::Zero(m);
    for (int n = 0; n <= h.degree(); ++n) v(n) = h.coeff(n) * std::exp(0.5 * (n * std::log(t) + std::lgamma(n + 1.0)));
    return v;
  };
  CoherentFormReport r;
  const FockOperator tm = toeplitz(phi, m, PlanckScale(t));
  r.by_matrix = orthonormal(f).dot(tm.apply(orthonormal(g)));
  const int kd = std::max(f.degree(), g.degree());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex z = rule.point(i);
    const double w = rule.weight(i);
    r.by_quadrature += w * std::conj(f(z)) * phi(z) * g(z);
    const HoloFunction kz = coherent_function(sp, z, kd);
    r.by_coherent_states += w * phi(z) * std::conj(kz.inner(f)) * kz.inner(g);
  }
  r.residual = std::max({std::abs(r.by_matrix - r.by_quadrature), std::abs(r.by_matrix - r.by_coherent_states),
                         std::abs(r.by_quadrature - r.by_coherent_states)});
  return r;
}

}  // namespace holoquant
