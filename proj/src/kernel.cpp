#include "sclif/kernel.hpp"

#include <cmath>
#include <iostream>
#include <limits>

namespace sclif {

namespace {

void check_pair(const Paravector& p, const Paravector& s, const char* what) {
  if (p.generators() != s.generators())
    throw DimensionMismatch(std::string(what) +
                            ": operands over different generator counts");
}

void check_terms(int N, const char* what) {
  if (N < 1) throw std::invalid_argument(std::string(what) + ": need at least one term");
}

void check_nonzero_s(const Paravector& s, const char* what) {
  if (s.norm_squared() == 0.0)
    throw std::domain_error(std::string(what) + ": s must be nonzero");
}

// The class quadratic of s evaluated at p, as a paravector on p's plane.
Paravector kernel_quadratic(const Paravector& p, const Paravector& s) {
  const std::complex<double> zp(p.scalar(), p.vec_norm());
  const std::complex<double> zq =
      zp * zp - 2.0 * s.scalar() * zp + s.norm_squared();
  const double r = p.vec_norm();
  std::vector<double> vec(p.generators(), 0.0);
  if (r > 0.0)
    for (int i = 0; i < p.generators(); ++i) vec[i] = zq.imag() * p.vec()[i] / r;
  return Paravector(zq.real(), std::move(vec));
}

bool quadratic_singular(const Paravector& q, const Paravector& p, const Paravector& s) {
  const double scale = p.norm_squared() + s.norm_squared();
  return q.norm_squared() <= (kSingularKernelTol * scale) * (kSingularKernelTol * scale) ||
         scale == 0.0;
}

bool all_zero(const Eigen::MatrixXd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0.0) return false;
  return true;
}

}  // namespace

Multivector kernel_series_sum(const Paravector& p, const Paravector& s, int N) {
  check_pair(p, s, "kernel_series_sum");
  check_terms(N, "kernel_series_sum");
  check_nonzero_s(s, "kernel_series_sum");
  if (p.norm() >= s.norm())
    std::cerr << "sclif: warning: kernel series with |p| = " << p.norm()
              << " >= |s| = " << s.norm() << " does not converge\n";
  const int n = p.generators();
  Multivector acc(n);
  Multivector pk = Multivector::scalar(n, 1.0);
  const Multivector pm = p.to_multivector();
  for (int k = 0; k < N; ++k) {
    acc += pk * power(s, -1 - k).to_multivector();
    if (k + 1 < N) pk = pk * pm;
  }
  return acc;
}

double kernel_tail_ratio(const Paravector& p, const Paravector& s) {
  check_pair(p, s, "kernel_tail_ratio");
  check_nonzero_s(s, "kernel_tail_ratio");
  return p.norm() / s.norm();
}

Multivector kernel_closed_form(const Paravector& p, const Paravector& s) {
  check_pair(p, s, "kernel_closed_form");
  const Paravector q = kernel_quadratic(p, s);
  if (quadratic_singular(q, p, s))
    throw SingularKernel("kernel_closed_form: quadratic vanishes (p in the class of sbar)");
  const Paravector w = p - s.conjugate();
  return -(q.inverse().to_multivector() * w.to_multivector());
}

Multivector kernel_inverse(const Paravector& p, const Paravector& s) {
  check_pair(p, s, "kernel_inverse");
  const Paravector w = p - s.conjugate();
  if (w.norm_squared() == 0.0)
    throw SingularKernel("kernel_inverse: p equals the conjugate of s");
  const Paravector q = kernel_quadratic(p, s);
  return -(w.inverse().to_multivector() * q.to_multivector());
}

double verify_identity_ss1(const Paravector& p, const Paravector& s, int N) {
  check_pair(p, s, "verify_identity_ss1");
  const Paravector factor = -kernel_quadratic(p, s);  // -|s|^2 - p^2 + 2 p Re[s]
  const Multivector lhs = factor.to_multivector() * kernel_series_sum(p, s, N);
  Paravector rhs = p + s;
  rhs += Paravector::real(p.generators(), -2.0 * s.scalar());
  return (lhs - rhs.to_multivector()).norm();
}

OperatorParavector::OperatorParavector(int n, std::vector<Eigen::MatrixXd> mats)
    : n_(n), mats_(std::move(mats)) {
  if (n < 1 || n > kMaxGenerators)
    throw std::invalid_argument("operator paravector: bad generator count");
  if (static_cast<int>(mats_.size()) != n + 1)
    throw std::invalid_argument("operator paravector needs n + 1 components");
  d_ = static_cast<int>(mats_.front().rows());
  if (d_ < 1) throw std::invalid_argument("operator paravector: empty matrices");
  for (const auto& m : mats_)
    if (m.rows() != d_ || m.cols() != d_)
      throw DimensionMismatch("operator paravector: components must be square of equal size");
}

double OperatorParavector::frobenius_norm() const {
  double s = 0.0;
  for (const auto& m : mats_) s += m.squaredNorm();
  return std::sqrt(s);
}

MatrixMultivector::MatrixMultivector(int n, int d) : n_(n), d_(d) {
  if (n < 1 || n > kMaxGenerators)
    throw std::invalid_argument("matrix multivector: bad generator count");
  if (d < 1) throw std::invalid_argument("matrix multivector: bad matrix size");
  coeffs_.assign(std::size_t{1} << n, Eigen::MatrixXd::Zero(d, d));
}

MatrixMultivector MatrixMultivector::from_paravector(const Paravector& s, int d) {
  MatrixMultivector out(s.generators(), d);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  out[0] = s.scalar() * id;
  for (int i = 0; i < s.generators(); ++i) out[Mask{1} << i] = s.vec()[i] * id;
  return out;
}

MatrixMultivector MatrixMultivector::from_operator(const OperatorParavector& t) {
  MatrixMultivector out(t.generators(), t.dim());
  out[0] = t.component(0);
  for (int i = 0; i < t.generators(); ++i) out[Mask{1} << i] = t.component(i + 1);
  return out;
}

double MatrixMultivector::norm() const {
  double s = 0.0;
  for (const auto& m : coeffs_) s += m.squaredNorm();
  return std::sqrt(s);
}

MatrixMultivector& MatrixMultivector::operator+=(const MatrixMultivector& rhs) {
  if (n_ != rhs.n_ || d_ != rhs.d_)
    throw DimensionMismatch("matrix multivector sum: shapes disagree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

MatrixMultivector& MatrixMultivector::operator-=(const MatrixMultivector& rhs) {
  if (n_ != rhs.n_ || d_ != rhs.d_)
    throw DimensionMismatch("matrix multivector difference: shapes disagree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

MatrixMultivector& MatrixMultivector::operator*=(double s) {
  for (auto& m : coeffs_) m *= s;
  return *this;
}

MatrixMultivector operator+(MatrixMultivector a, const MatrixMultivector& b) {
  return a += b;
}

MatrixMultivector operator-(MatrixMultivector a, const MatrixMultivector& b) {
  return a -= b;
}

MatrixMultivector operator*(const MatrixMultivector& a, const MatrixMultivector& b) {
  if (a.generators() != b.generators() || a.dim() != b.dim())
    throw DimensionMismatch("matrix multivector product: shapes disagree");
  // Mirrors the scalar product loop blade for blade so the d = 1 case
  // reproduces it exactly; matrix factors keep their order.
  MatrixMultivector out(a.generators(), a.dim());
  const Mask size = static_cast<Mask>(a.size());
  for (Mask i = 0; i < size; ++i) {
    if (all_zero(a[i])) continue;
    for (Mask j = 0; j < size; ++j) {
      if (all_zero(b[j])) continue;
      out[i ^ j] += blade_sign(i, j) * (a[i] * b[j]);
    }
  }
  return out;
}

MatrixMultivector operator_kernel_sum(const OperatorParavector& t,
                                      const Paravector& s, int N) {
  if (t.generators() != s.generators())
    throw DimensionMismatch("operator_kernel_sum: operands over different generator counts");
  check_terms(N, "operator_kernel_sum");
  check_nonzero_s(s, "operator_kernel_sum");
  if (t.frobenius_norm() >= s.norm())
    std::cerr << "sclif: warning: operator kernel series with component norm "
              << t.frobenius_norm() << " >= |s| = " << s.norm()
              << " has no convergence guarantee\n";
  const int n = t.generators(), d = t.dim();
  MatrixMultivector acc(n, d);
  MatrixMultivector tk = MatrixMultivector::from_paravector(
      Paravector::real(n, 1.0), d);
  const MatrixMultivector tm = MatrixMultivector::from_operator(t);
  for (int k = 0; k < N; ++k) {
    acc += tk * MatrixMultivector::from_paravector(power(s, -1 - k), d);
    if (k + 1 < N) tk = tk * tm;
  }
  return acc;
}

double verify_identity_ss1(const OperatorParavector& t, const Paravector& s, int N) {
  if (t.generators() != s.generators())
    throw DimensionMismatch("verify_identity_ss1: operands over different generator counts");
  const int n = t.generators(), d = t.dim();
  const MatrixMultivector tm = MatrixMultivector::from_operator(t);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);

  MatrixMultivector factor = tm * tm;   // T^2
  factor *= -1.0;                       // -T^2
  MatrixMultivector lin = tm;
  lin *= 2.0 * s.scalar();
  factor += lin;                        // + 2 Re[s] T
  factor[0] -= s.norm_squared() * id;   // - |s|^2

  const MatrixMultivector lhs = factor * operator_kernel_sum(t, s, N);
  MatrixMultivector rhs = MatrixMultivector::from_paravector(s, d);
  rhs += tm;
  rhs[0] -= 2.0 * s.scalar() * id;
  return (lhs - rhs).norm();
}

std::vector<ProbePoint> singularity_probe(const Paravector& s,
                                          const std::vector<Paravector>& path) {
  std::vector<ProbePoint> out;
  out.reserve(path.size());
  const Paravector sbar = s.conjugate();
  for (const Paravector& p : path) {
    const double dist = (p - sbar).norm();
    double norm;
    try {
      norm = kernel_closed_form(p, s).norm();
    } catch (const SingularKernel&) {
      norm = std::numeric_limits<double>::infinity();
    }
    out.push_back(ProbePoint{dist, norm});
  }
  return out;
}

}  // namespace sclif
