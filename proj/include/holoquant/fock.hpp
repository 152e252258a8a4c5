#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holoquant/core.hpp"

namespace holoquant {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxHermiteOrder = 512;

struct HermiteBasisSpec {
  HermiteBasisSpec(int n, PlanckScale s) : truncation(n), scale(s) {
    if (n < 2) throw InvalidArgument("truncation must be >= 2");
  }
  int truncation;
  PlanckScale scale;
};

class FockOperator {
 public:
  FockOperator(CMatrix entries, PlanckScale scale);
  static FockOperator zero(const HermiteBasisSpec& spec);
  static FockOperator identity(const HermiteBasisSpec& spec);

  const CMatrix& entries() const { return m_; }
  int truncation() const { return static_cast<int>(m_.rows()); }
  PlanckScale scale() const { return scale_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  FockOperator adjoint() const;
  FockOperator operator+(const FockOperator& o) const;
  FockOperator operator-(const FockOperator& o) const;
  FockOperator operator*(const FockOperator& o) const;
  FockOperator operator*(Complex s) const;
  friend FockOperator operator*(Complex s, const FockOperator& a) { return a * s; }
  CVector apply(const CVector& v) const;

 private:
  void check_compatible(const FockOperator& o) const;
  CMatrix m_;
  PlanckScale scale_;
};

// C = A * B through the dispatched complex GEMM kernel
CMatrix matmul(const CMatrix& a, const CMatrix& b);

struct LadderPair {
  FockOperator a, a_dag;
};
struct CanonicalPair {
  FockOperator x, p;
};

LadderPair ladder(const HermiteBasisSpec& spec);
CanonicalPair position_momentum(const HermiteBasisSpec& spec);
FockOperator commutator(const FockOperator& a, const FockOperator& b);
FockOperator kron(const FockOperator& a, const FockOperator& b);

double hermite_eval(int n, double x, PlanckScale scale);
// h_0(x) .. h_{n_max}(x)
std::vector<double> hermite_functions(int n_max, double x, PlanckScale scale);

struct SvnReport {
  double number_residual = 0.0;    // E e_n = hbar n e_n
  double lowering_residual = 0.0;  // a (a*)^n e_0 = hbar n (a*)^(n-1) e_0
  double gram_residual = 0.0;      // <(a*)^n e_0, (a*)^m e_0> = delta hbar^n n!
  double max_residual() const;
};
SvnReport svn_ladder_identities(const HermiteBasisSpec& spec);

// Size of the leading block on which a product of total degree `degree` in
// the ladder/canonical operators agrees with the untruncated operator.
int exact_block(int truncation, int degree);
double max_abs_block(const CMatrix& m, int block);

}  // namespace holoquant
