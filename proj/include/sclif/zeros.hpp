#pragma once

#include <cstdint>

#include "sclif/series.hpp"

namespace sclif {

/// Monic quadratic x^2 + c1 x + c0 with real coefficients whose root set is
/// exactly the equivalence class of the paravector s.
struct CharacteristicQuadratic {
  double c1;  // -2 Re[s]
  double c0;  // |s|^2
};

CharacteristicQuadratic characteristic_quadratic(const Paravector& s);

/// Norm of v^2 + c1 v + c0 computed with full geometric products.
double class_quadratic_residual(const Multivector& v, double c1, double c0);

/// Whether x satisfies the class quadratic of s within tol.
bool is_in_class(const Paravector& x, const Paravector& s, double tol = 1e-10);

/// Residual of v^2 - 2 (scalar part) v + ||v||^2 for an arbitrary
/// multivector. Zero on paravectors; nonzero in general (v = 1 - e123 gives
/// exactly 2), so the quadratic characterizes classes only on the paravector
/// subspace.
double quadratic_counterexample_check(const Multivector& v);

/// (x0 + y0 I)^m = alpha + I beta. Binomial expansion with I^2 = -1 collected
/// by parity; never touches a concrete unit, so it is slice independent.
struct AlphaBeta {
  double alpha;
  double beta;
};

AlphaBeta alpha_beta(double x0, double y0, int m);

struct SphereZeroVerdict {
  bool root1;
  bool root2;
  bool whole_sphere;
  Multivector alpha_sum;  // sum_m alpha_m a_m
  Multivector beta_sum;   // sum_m beta_m a_m
  double root1_residual;
  double root2_residual;
  double max_sample_residual;  // over the confirmation samples (0 if skipped)
};

/// Tests the two class points x0 + y0 I1 and x0 + y0 I2 (I1 != I2 required,
/// y0 > 0). When both vanish, the coefficient sums sum alpha_m a_m and
/// sum beta_m a_m must vanish too, forcing the series to zero on the whole
/// (n-1)-sphere; this is confirmed on freshly sampled units.
SphereZeroVerdict sphere_zero_test(const PowerSeries& series, double x0, double y0,
                                   const UnitOneVector& I1, const UnitOneVector& I2,
                                   double tol, std::uint64_t seed = 42,
                                   int samples = 100);

/// Scale-aware default: 1e-9 times sum ||a_m|| max(1, |x0| + y0)^m.
double default_zero_tolerance(const PowerSeries& series, double x0, double y0);

}  // namespace sclif
