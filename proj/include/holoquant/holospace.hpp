#pragma once

#include <functional>
#include <span>
#include <vector>

#include "holoquant/core.hpp"
#include "holoquant/quadrature.hpp"

namespace holoquant {

enum class SpaceKind { SegalBargmann, Bergman, WeightedBergman, Hardy, InvariantGaussian };

// InvariantGaussian is the space of holomorphic functions square-integrable
// against (pi hbar)^(-1/2) exp(-(Im z)^2/hbar); it supports kernels only.
class SpaceSpec {
 public:
  static SpaceSpec segal_bargmann(double t, int dim = 1);
  static SpaceSpec bergman();
  static SpaceSpec weighted_bergman(double a);
  static SpaceSpec hardy();
  static SpaceSpec invariant_gaussian(double hbar);

  SpaceKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double param() const { return param_; }  // t, a or hbar
  bool is_disk() const;
  bool monomials_orthogonal() const { return kind_ != SpaceKind::InvariantGaussian; }

  // ||z^n||^2 for a single variable
  double monomial_norm_sq(int n) const;
  double log_monomial_norm_sq(int n) const;
  void check_point(std::span<const Complex> z) const;

 private:
  SpaceSpec(SpaceKind k, double p, int d) : kind_(k), param_(p), dim_(d) {}
  SpaceKind kind_;
  double param_;
  int dim_;
};

// Taylor coefficients up to `degree` in every variable. dim 1: c[n];
// dim 2: c[i * (degree + 1) + j] multiplies z1^i z2^j.
class HoloFunction {
 public:
  HoloFunction(SpaceSpec space, int degree, std::vector<Complex> coeffs);
  static HoloFunction zero(SpaceSpec space, int degree);
  static HoloFunction monomial(SpaceSpec space, int n);
  static HoloFunction monomial(SpaceSpec space, int i, int j);

  const SpaceSpec& space() const { return space_; }
  int degree() const { return degree_; }
  int dim() const { return space_.dim(); }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int n) const;
  Complex coeff(int i, int j) const;

  Complex operator()(Complex z) const;
  Complex operator()(std::span<const Complex> z) const;
  double norm_sq() const;
  double norm() const;
  Complex inner(const HoloFunction& g) const;  // conjugate-linear in *this
  HoloFunction resized(int degree) const;
  HoloFunction operator+(const HoloFunction& g) const;
  HoloFunction operator-(const HoloFunction& g) const;
  HoloFunction operator*(Complex s) const;
  HoloFunction derivative() const;  // d/dz, dim 1
  double max_coeff_diff(const HoloFunction& g) const;

 private:
  SpaceSpec space_;
  int degree_;
  std::vector<Complex> c_;
};

Complex kernel(const SpaceSpec& space, std::span<const Complex> z, std::span<const Complex> w);
Complex kernel(const SpaceSpec& space, Complex z, Complex w);
// sum over n <= m of e_n(z) conj e_n(w)
Complex kernel_from_basis(const SpaceSpec& space, std::span<const Complex> z,
                          std::span<const Complex> w, int m);
Complex kernel_from_basis(const SpaceSpec& space, Complex z, Complex w, int m);

// K(., z) conjugated, i.e. the function w -> K(w, z), truncated at degree m
HoloFunction coherent_function(const SpaceSpec& space, Complex z, int m);

struct PointwiseBound {
  double ratio;  // |F(z)|^2 / (K(z,z) ||F||^2)
  bool holds;
};
PointwiseBound pointwise_bound_check(const SpaceSpec& space, const HoloFunction& f, Complex z);

// int K(z,w) G(w) alpha(w) dw, rule integrating against alpha
Complex project(const SpaceSpec& space, const std::function<Complex(Complex)>& g, Complex z,
                const QuadratureRule& rule);
Complex reproduce(const SpaceSpec& space, const HoloFunction& f, Complex z,
                  const QuadratureRule& rule);
// int |F|^2 alpha
double quadrature_norm_sq(const HoloFunction& f, const QuadratureRule& rule);

struct TranslateOptions {
  double growth = 40.0;      // series terms per unit |a|^2/t
  double tail_target = 1e-30;
};
// number of e^{a z / t} series terms used for a shift of size |a|^2/t
int translate_series_terms(double lambda, const TranslateOptions& opt = {});
// Poisson tail bound of the dropped series terms
double translate_tail_bound(double lambda, int terms);
HoloFunction translate(std::span<const Complex> a, const HoloFunction& f, PlanckScale t,
                       const TranslateOptions& opt = {});
HoloFunction translate(Complex a, const HoloFunction& f, PlanckScale t,
                       const TranslateOptions& opt = {});

struct Su11Element {
  Complex alpha, beta;  // [[alpha, beta], [conj beta, conj alpha]]
};
Su11Element su11_from_matrix(const Complex m[2][2]);
Su11Element su11_compose(const Su11Element& g, const Su11Element& h);
HoloFunction su11_act(const Su11Element& g, const HoloFunction& f, double a, int out_degree = -1);

// p(z) exp(q(z)) with polynomials p, q
struct Multiplier {
  std::vector<Complex> poly{1.0};
  std::vector<Complex> exponent;
  Complex operator()(Complex z) const;
  static Multiplier constant(Complex c);
  static Multiplier exp_poly(Complex c, std::vector<Complex> q);
};
// The image phi F of F under a holomorphic equivalence. Kept as a product
// rather than a Taylor series: truncated series of exp(q) lose all accuracy
// where |exp(q)| is small.
struct EquivalentFunction {
  Multiplier phi;
  HoloFunction f;
  Complex operator()(Complex z) const { return phi(z) * f(z); }
  // int |phi F|^2 against the rule's weight
  double norm_sq(const QuadratureRule& target) const;
};
// throws DegenerateEquivalence if phi vanishes at a node of `rule`
EquivalentFunction holo_equiv(const Multiplier& phi, const HoloFunction& f,
                              const QuadratureRule& rule);
// discrete Laplacian of log|phi|^2 at z with step h
double log_modulus_laplacian(const Multiplier& phi, Complex z, double h);

}  // namespace holoquant
