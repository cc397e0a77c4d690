#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "sclif/slice.hpp"

namespace sclif {

inline constexpr std::size_t kDefaultCompositionOrder = 32;
inline constexpr std::size_t kDefaultTruncationOrder = 64;

/// One-sided power series sum_m x^m a_m: the variable sits on the left, the
/// Clifford coefficient on the right. Stored series are always finite.
class PowerSeries {
 public:
  explicit PowerSeries(int n);
  explicit PowerSeries(std::vector<Multivector> coeffs,
                       double radius = std::numeric_limits<double>::infinity());

  int generators() const { return n_; }
  std::size_t term_count() const { return coeffs_.size(); }
  const Multivector& coefficient(std::size_t m) const { return coeffs_.at(m); }
  const std::vector<Multivector>& coefficients() const { return coeffs_; }

  double radius() const { return radius_; }
  void set_radius(double r) { radius_ = r; }

  /// Monomials are evaluated on the slice plane of x (complex arithmetic in
  /// 1 and x_vec/|x_vec|), then multiplied onto the coefficient from the left.
  Multivector eval(const Paravector& x) const;

 private:
  int n_;
  std::vector<Multivector> coeffs_;
  double radius_;
};

/// Regular part plus principal part sum_{m>=1} x^{-m} b_m, convergent on the
/// annulus inner_radius < |x| < outer_radius.
class LaurentSeries {
 public:
  LaurentSeries(PowerSeries regular, std::vector<Multivector> principal,
                double inner_radius, double outer_radius);

  int generators() const { return regular_.generators(); }
  const PowerSeries& regular() const { return regular_; }
  const std::vector<Multivector>& principal() const { return principal_; }
  double inner_radius() const { return inner_; }
  double outer_radius() const { return outer_; }

  bool has_principal() const;

  /// Throws std::domain_error at x = 0 when a nonzero principal part exists.
  Multivector eval(const Paravector& x) const;

 private:
  PowerSeries regular_;
  std::vector<Multivector> principal_;  // principal_[k] multiplies x^{-(k+1)}
  double inner_;
  double outer_;
};

/// Slice derivative: on power series simply sum_m x^m (m+1) a_{m+1}.
PowerSeries s_derivative(const PowerSeries& f);

/// Cauchy product. Only valid when the left factor has real coefficients,
/// which is checked (<= 1e-13 relative) and otherwise rejected: real
/// coefficients commute with the variable, arbitrary ones do not.
PowerSeries multiply_real(const PowerSeries& f, const PowerSeries& g);

/// f(g(x)) truncated at the given order; g must have real coefficients.
PowerSeries compose_real(const PowerSeries& f, const PowerSeries& g,
                         std::size_t order = kDefaultCompositionOrder);

/// Re-expansion around the real point y0: returns the series in the shifted
/// variable, i.e. eval(recenter(f, y0), x) = eval(f, x + y0).
PowerSeries recenter(const PowerSeries& f, double y0);

/// f composed with the inversion x -> xbar/|x|^2, i.e. sum_m x^{-m} a_m.
LaurentSeries compose_inversion(const PowerSeries& f);

/// Holomorphic-to-slice extension: complex coefficients a + ib become the
/// Clifford constants a + bI.
PowerSeries extend_holomorphic(const std::vector<std::complex<double>>& coeffs,
                               const UnitOneVector& I);

/// Root-test estimate 1 / sup ||a_m||^{1/m} over the stored tail window
/// (upper half of the stored degrees). Infinite when that tail vanishes, as
/// it does for polynomials padded to a truncation order.
double estimate_radius(const PowerSeries& f);

/// Central-difference residual of (d/dx + I d/dy) f / 2 at a slice point.
/// Vanishes (to O(h^2)) exactly on slice monogenic functions.
Multivector monogenicity_residual(const SliceEvaluator& f, const SlicePoint& p,
                                  double h = 1e-4);

SliceEvaluator evaluator(const PowerSeries& f);
SliceEvaluator evaluator(const LaurentSeries& f);

}  // namespace sclif
