#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holoquant/core.hpp"
#include "holoquant/fock.hpp"
#include "holoquant/holospace.hpp"
#include "holoquant/quadrature.hpp"
#include "holoquant/transform.hpp"

namespace holoquant {

// Polynomial in commuting x_1..x_d, p_1..p_d. A key holds the x exponents
// followed by the p exponents.
class PhaseSymbol {
 public:
  using Key = std::vector<int>;

  explicit PhaseSymbol(int dim = 1);
  static PhaseSymbol constant(Complex c, int dim = 1);
  static PhaseSymbol monomial(int n, int m, Complex c = 1.0);  // c x^n p^m
  static PhaseSymbol monomial(Key key, Complex c = 1.0);
  static PhaseSymbol x(int k = 0, int dim = 1);
  static PhaseSymbol p(int k = 0, int dim = 1);

  int dim() const { return dim_; }
  const std::map<Key, Complex>& terms() const { return terms_; }
  Complex coeff(const Key& key) const;
  void add_term(const Key& key, Complex c);
  bool empty() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero symbol
  bool is_real() const;

  PhaseSymbol operator+(const PhaseSymbol& g) const;
  PhaseSymbol operator-(const PhaseSymbol& g) const;
  PhaseSymbol operator*(const PhaseSymbol& g) const;
  PhaseSymbol operator*(Complex s) const;
  friend PhaseSymbol operator*(Complex s, const PhaseSymbol& f) { return f * s; }
  bool operator==(const PhaseSymbol& g) const;

  PhaseSymbol d_x(int k = 0) const;
  PhaseSymbol d_p(int k = 0) const;
  Complex operator()(std::span<const double> x, std::span<const double> p) const;
  Complex operator()(double x, double p) const;
  double max_abs_diff(const PhaseSymbol& g) const;

 private:
  void check_key(const Key& key) const;
  int dim_;
  std::map<Key, Complex> terms_;
};

PhaseSymbol poisson(const PhaseSymbol& f, const PhaseSymbol& g);
PhaseSymbol laplacian(const PhaseSymbol& f);
// exp(hbar Laplacian / 4) f, a finite sum for polynomials
PhaseSymbol heat_smooth(const PhaseSymbol& f, PlanckScale scale);

enum class OrderingScheme { PDOStandard, PDOReverse, Weyl, Wick, AntiWick };
const char* scheme_name(OrderingScheme s);
OrderingScheme scheme_from_name(const std::string& name);
inline constexpr OrderingScheme kAllSchemes[] = {OrderingScheme::PDOStandard, OrderingScheme::PDOReverse,
                                                 OrderingScheme::Weyl, OrderingScheme::Wick,
                                                 OrderingScheme::AntiWick};

// Matrix of Q(f) on the truncation (N^d for d variables). Throws
// InsufficientTruncation when the exact leading block would be smaller than
// min_block.
FockOperator quantize(OrderingScheme scheme, const PhaseSymbol& f, const HermiteBasisSpec& spec,
                      int min_block = 1);

struct BracketReport {
  int block = 0;
  CMatrix quantum;      // (1/i hbar)[Q f, Q g]
  CMatrix classical;    // Q({f, g})
  CMatrix discrepancy;  // quantum - classical
  double max_abs = 0.0;
};
BracketReport commutator_vs_poisson(const PhaseSymbol& f, const PhaseSymbol& g, const HermiteBasisSpec& spec,
                                    OrderingScheme scheme = OrderingScheme::Weyl);

// <psi, Q_Weyl(f) psi>
Complex weyl_moment(const WaveFunction& psi, const PhaseSymbol& f);
// int f H_psi dx dp by tensor Gauss-Hermite; n_nodes = 0 picks an exact order
Complex husimi_moment(const WaveFunction& psi, const PhaseSymbol& f, int n_nodes = 0);

// Polynomial in z, conj z: key (a, b) multiplies z^a conj(z)^b
class SBSymbol {
 public:
  using Key = std::pair<int, int>;
  SBSymbol() = default;
  static SBSymbol monomial(int a, int b, Complex c = 1.0);
  const std::map<Key, Complex>& terms() const { return terms_; }
  void add_term(Key key, Complex c);
  int degree() const;
  int z_degree() const;
  SBSymbol operator+(const SBSymbol& g) const;
  SBSymbol operator*(const SBSymbol& g) const;
  SBSymbol operator*(Complex s) const;
  Complex operator()(Complex z) const;

 private:
  std::map<Key, Complex> terms_;
};

// phi(x, p) at x = (z + conj z)/sqrt2, p = i(z - conj z)/sqrt2, i.e. phi(sqrt2 conj z)
SBSymbol bridge_symbol(const PhaseSymbol& f);

// T_phi on the orthonormal monomials z^n / sqrt(n! t^n), n < M
FockOperator toeplitz(const SBSymbol& phi, int m, PlanckScale t);
FockOperator toeplitz_quadrature(const SBSymbol& phi, int m, PlanckScale t, int nodes = 0);

// max leading-block |A T_{phi'} A^-1 - Q_antiWick(phi)|
double antiwick_toeplitz_bridge(const PhaseSymbol& f, const HermiteBasisSpec& spec);

struct CoherentFormReport {
  Complex by_matrix, by_quadrature, by_coherent_states;
  double residual = 0.0;
};
// rule integrates against mu_t
CoherentFormReport toeplitz_coherent_form(const SBSymbol& phi, const HoloFunction& f, const HoloFunction& g,
                                          const QuadratureRule& rule);

}  // namespace holoquant
