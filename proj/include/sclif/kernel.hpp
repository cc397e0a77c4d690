#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sclif/multivector.hpp"

namespace sclif {

/// The kernel denominator degenerated (p in the conjugate class of s).
struct SingularKernel : std::domain_error {
  using std::domain_error::domain_error;
};

// Quadratic norms under this fraction of |p|^2 + |s|^2 count as singular.
inline constexpr double kSingularKernelTol = 1e-12;

/// Partial sum sum_{k<N} p^k s^{-1-k} of the noncommutative Cauchy kernel
/// series. Convergent for |p| < |s|; the tail is bounded by (|p|/|s|)^N.
/// Powers of p are accumulated with full geometric products so the scalar
/// case agrees exactly with the matrix-coefficient path at d = 1.
Multivector kernel_series_sum(const Paravector& p, const Paravector& s, int N);

/// |p| / |s|, the geometric decay rate of the series terms.
double kernel_tail_ratio(const Paravector& p, const Paravector& s);

/// Closed form -(p^2 - 2 p Re[s] + |s|^2)^{-1} (p - sbar). The quadratic is a
/// paravector on p's plane, so paravector inversion applies. Throws
/// SingularKernel when the quadratic degenerates (p in the class of sbar).
Multivector kernel_closed_form(const Paravector& p, const Paravector& s);

/// -(p - sbar)^{-1} (p^2 - 2 p Re[s] + |s|^2), the two-sided inverse of the
/// closed form. Throws SingularKernel at p = sbar.
Multivector kernel_inverse(const Paravector& p, const Paravector& s);

/// Residual of (-|s|^2 - p^2 + 2 p Re[s]) sum_{k<N} p^k s^{-1-k}
///           = s + p - 2 Re[s],
/// which telescopes because sbar kills its own class quadratic. Decays like
/// (|p|/|s|)^N exactly.
double verify_identity_ss1(const Paravector& p, const Paravector& s, int N);

/// T = T_0 + T_1 e_1 + ... + T_n e_n with square matrix components: the
/// series argument in the operator setting. s stays a scalar paravector.
class OperatorParavector {
 public:
  OperatorParavector(int n, std::vector<Eigen::MatrixXd> mats);

  int generators() const { return n_; }
  int dim() const { return d_; }
  const Eigen::MatrixXd& component(int j) const { return mats_.at(j); }

  /// Frobenius norm of the stacked components, the convergence proxy for |T|.
  double frobenius_norm() const;

 private:
  int n_;
  int d_;
  std::vector<Eigen::MatrixXd> mats_;
};

/// Element of the Clifford algebra with d x d matrix blade coefficients.
/// The product mirrors the scalar coefficient loop blade for blade; matrix
/// factors keep their order since they need not commute.
class MatrixMultivector {
 public:
  MatrixMultivector(int n, int d);

  static MatrixMultivector from_paravector(const Paravector& s, int d);
  static MatrixMultivector from_operator(const OperatorParavector& t);

  int generators() const { return n_; }
  int dim() const { return d_; }
  std::size_t size() const { return coeffs_.size(); }

  const Eigen::MatrixXd& operator[](Mask m) const { return coeffs_[m]; }
  Eigen::MatrixXd& operator[](Mask m) { return coeffs_[m]; }

  /// sqrt of the summed squared Frobenius norms of all blade coefficients.
  double norm() const;

  MatrixMultivector& operator+=(const MatrixMultivector& rhs);
  MatrixMultivector& operator-=(const MatrixMultivector& rhs);
  MatrixMultivector& operator*=(double s);

 private:
  int n_;
  int d_;
  std::vector<Eigen::MatrixXd> coeffs_;
};

MatrixMultivector operator+(MatrixMultivector a, const MatrixMultivector& b);
MatrixMultivector operator-(MatrixMultivector a, const MatrixMultivector& b);
MatrixMultivector operator*(const MatrixMultivector& a, const MatrixMultivector& b);

/// sum_{k<N} T^k s^{-1-k} with T-powers in the matrix-coefficient algebra.
/// At d = 1 this reproduces kernel_series_sum exactly, operation for
/// operation: nothing in the telescoping uses commutativity of the
/// components of T.
MatrixMultivector operator_kernel_sum(const OperatorParavector& t,
                                      const Paravector& s, int N);

/// Operator version of the telescoped identity residual.
double verify_identity_ss1(const OperatorParavector& t, const Paravector& s, int N);

struct ProbePoint {
  double distance;     // |p - sbar|
  double kernel_norm;  // ||closed form||, +inf where singular
};

/// Closed-form norms along a path of evaluation points, for watching the
/// blow-up toward the conjugate class.
std::vector<ProbePoint> singularity_probe(const Paravector& s,
                                          const std::vector<Paravector>& path);

}  // namespace sclif
