#pragma once

#include <functional>
#include <span>
#include <vector>

#include "holoquant/core.hpp"
#include "holoquant/fock.hpp"
#include "holoquant/holospace.hpp"
#include "holoquant/quadrature.hpp"

namespace holoquant {

// Lebesgue: psi = sum c_n h_n with h_n the normalized Hermite functions.
// GaussianWeight: f = sum c_n q_n, q_n(y) = He_n(y / sqrt(hbar)) / sqrt(n!),
// orthonormal in L^2(rho_hbar).
enum class Representation { Lebesgue, GaussianWeight };

class WaveFunction {
 public:
  WaveFunction(std::vector<Complex> coeffs, PlanckScale scale,
               Representation rep = Representation::Lebesgue);
  static WaveFunction basis(int n, PlanckScale scale, Representation rep = Representation::Lebesgue);

  const std::vector<Complex>& coeffs() const { return c_; }
  PlanckScale scale() const { return scale_; }
  Representation representation() const { return rep_; }
  int size() const { return static_cast<int>(c_.size()); }

  double norm_sq() const;
  Complex inner(const WaveFunction& g) const;
  WaveFunction normalized() const;
  Complex operator()(double x) const;
  // GaussianWeight only: polynomial continuation to complex argument
  Complex operator()(Complex y) const;
  std::vector<Complex> evaluate(std::span<const double> xs) const;
  // apply a FockOperator given in the same basis (result padded/truncated to op size)
  WaveFunction apply(const FockOperator& op) const;

 private:
  std::vector<Complex> c_;
  PlanckScale scale_;
  Representation rep_;
};

// sum c_n q_n(y), hbar-scaled probabilists' Hermite basis
Complex gaussian_basis_sum(std::span<const Complex> c, Complex y, double hbar);

// psi / f_0 as an element of L^2(rho_hbar) evaluated at sqrt(2) x
WaveFunction ground_state_transform(const WaveFunction& psi);

HoloFunction transform_A(const WaveFunction& psi);
// default rule for transform_A_integral / transform_C: Gauss-Hermite against rho_{hbar/2}
QuadratureRule transform_rule(PlanckScale scale, int n = 160);
Complex transform_A_integral(const WaveFunction& psi, Complex z, const QuadratureRule& rule);
// rule: Gauss-Hermite against rho_hbar
Complex transform_B(const WaveFunction& f, Complex z, const QuadratureRule& rule);
Complex transform_B_alternate(const WaveFunction& f, Complex z, const QuadratureRule& rule);
// integral form; rule as for transform_A_integral
Complex transform_C(const WaveFunction& psi, Complex z, const QuadratureRule& rule);
// closed form through A
Complex transform_C_closed(const WaveFunction& psi, Complex z);
// C e_n (z) for the normalized Hermite basis
Complex transform_C_basis(int n, Complex z, PlanckScale scale);

// psi(x) from the values C psi(x + i p); rule: Gauss-Hermite against rho_hbar
Complex invert_C(const std::function<Complex(Complex)>& c_psi, double x, const QuadratureRule& rule);

// truncation that keeps the dropped coefficient mass below `tail`
int coherent_truncation(Complex z, PlanckScale scale, double tail = 1e-32);
WaveFunction coherent_state(Complex z, PlanckScale scale, int truncation = 0);
// (2 pi hbar)^(-1/2) exp(-(conj z - x)^2 / 2 hbar)
Complex coherent_state_value(Complex z, double x, PlanckScale scale);

struct PhasePoint {
  double x, p;
};
std::vector<double> husimi(const WaveFunction& psi, std::span<const PhasePoint> grid);
double husimi_value(const WaveFunction& psi, double x, double p);
// int H dx dp with Gauss-Hermite in p and Gauss-Legendre in x on [-W, W]
double husimi_total_mass(const WaveFunction& psi, int n_p = 80, int n_x = 200, double half_width = 0.0);

double resolution_check(const WaveFunction& f, const WaveFunction& g, const QuadratureRule& nu_rule);

// max |d/d conj z F| estimated on a circle of radius h around each center
double cauchy_riemann_residual(const std::function<Complex(Complex)>& f, std::span<const Complex> centers,
                               double h, int points = 16);

// int k(z,x) conj(k(w,x)) dx for the A-transform integral kernel; equals
// exp(z conj(w) / hbar). rule as for transform_A_integral.
Complex adjoint_kernel(Complex z, Complex w, PlanckScale scale, const QuadratureRule& rule);

// int x^k |psi(x)|^2 dx; rule: Gauss-Hermite against rho_{hbar/2}
Complex position_moment(const WaveFunction& psi, int k, const QuadratureRule& rule);

}  // namespace holoquant
