#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <vector>

#include "holoquant/core.hpp"
#include "holoquant/fock.hpp"
#include "holoquant/quadrature.hpp"

namespace holoquant::su2 {

using Matrix2 = Eigen::Matrix2cd;

enum class GroupTag { SU2, SL2C };

// Representation labels l are passed doubled: two_l = 2l.
inline constexpr int kMaxTwoL = 60;

class GroupElement {
 public:
  GroupElement(const Matrix2& m, GroupTag tag);
  static GroupElement identity(GroupTag tag = GroupTag::SU2);
  // [[alpha, -conj beta], [beta, conj alpha]]
  static GroupElement from_su2(Complex alpha, Complex beta);
  // exp(-i a s3/2) exp(-i b s2/2) exp(-i c s3/2)
  static GroupElement from_euler(double a, double b, double c);
  // exp(a H), H = diag(1, -1)
  static GroupElement exp_h(double a);

  const Matrix2& matrix() const { return m_; }
  GroupTag tag() const { return tag_; }
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  Complex trace() const { return m_.trace(); }

 private:
  Matrix2 m_;
  GroupTag tag_;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(const Matrix2& m);
  const Matrix2& matrix() const { return m_; }
  bool is_su2(double tol = 1e-12) const;

 private:
  Matrix2 m_;
};

struct Polar {
  GroupElement x;  // unitary factor
  AlgebraElement y;  // g = x exp(iY)
  double a;          // largest log singular value of g
};
Polar polar_decompose(const GroupElement& g);
Matrix2 exp_i(const AlgebraElement& y);

CMatrix rep_matrix(int two_l, const GroupElement& g);
Complex character(int two_l, const GroupElement& g);
// sin((2l+1) theta) / sin(theta), with the limit at theta = 0, pi
double character_angle(int two_l, double theta);

struct HeatKernelValue {
  Complex value;
  int two_l_max;
  double tail_bound;
};
// two_l_cutoff < 0 chooses the smallest cutoff with tail_bound < tol;
// ConvergenceFailure if that exceeds max_two_l
HeatKernelValue heat_kernel(double t, const GroupElement& g, int two_l_cutoff = -1, double tol = 1e-14,
                            int max_two_l = 400);
double heat_tail_bound(double t, double a, int two_l_cutoff);

class PeterWeylCoeffs {
 public:
  explicit PeterWeylCoeffs(int two_l_max);
  static PeterWeylCoeffs character(int two_l);
  int two_l_max() const { return static_cast<int>(blocks_.size()) - 1; }
  CMatrix& block(int two_l) { return blocks_.at(two_l); }
  const CMatrix& block(int two_l) const { return blocks_.at(two_l); }
  double norm_sq() const;
  // sum_l sqrt(2l+1) sum_mn c_mn pi_l(g)_mn
  Complex operator()(const GroupElement& g) const;
  // each block scaled by exp(-hbar l(l+1)/2)
  PeterWeylCoeffs heat_flow(double hbar) const;

 private:
  std::vector<CMatrix> blocks_;
};

Complex transform_group(const PeterWeylCoeffs& f, const GroupElement& g, double hbar);

struct EulerOrders {
  int alpha, beta, gamma;
};
EulerOrders euler_orders_for_degree(int two_d);
// dim-4 rule whose nodes are the matrix entries (row-major) of group elements
QuadratureRule euler_quadrature(EulerOrders orders);
GroupElement group_node(const QuadratureRule& rule, std::size_t i);

// int rho_hbar(g x^-1) f(x) dx with the Euler rule
Complex transform_group_direct(const PeterWeylCoeffs& f, const GroupElement& g, double hbar,
                               const QuadratureRule& rule, int heat_cutoff);
PeterWeylCoeffs project_peter_weyl(const std::function<Complex(const GroupElement&)>& f, int two_l_max,
                                   const QuadratureRule& rule);

GroupElement random_su2(std::mt19937_64& rng);
// x1 exp(aH) x2 with a uniform in [0, a_max]
GroupElement random_sl2c(std::mt19937_64& rng, double a_max);

}  // namespace holoquant::su2
