#include "sclif/zeros.hpp"

#include <cmath>

namespace sclif {

CharacteristicQuadratic characteristic_quadratic(const Paravector& s) {
  return CharacteristicQuadratic{-2.0 * s.scalar(), s.norm_squared()};
}

double class_quadratic_residual(const Multivector& v, double c1, double c0) {
  Multivector q = v * v + c1 * v;
  q[0] += c0;
  return q.norm();
}

bool is_in_class(const Paravector& x, const Paravector& s, double tol) {
  if (x.generators() != s.generators())
    throw DimensionMismatch("is_in_class: operands over different generator counts");
  const CharacteristicQuadratic q = characteristic_quadratic(s);
  return class_quadratic_residual(x.to_multivector(), q.c1, q.c0) <= tol;
}

double quadratic_counterexample_check(const Multivector& v) {
  return class_quadratic_residual(v, -2.0 * v.scalar_part(), v.norm_squared());
}

AlphaBeta alpha_beta(double x0, double y0, int m) {
  if (m < 0) throw std::invalid_argument("alpha_beta: exponent must be >= 0");
  // Binomial expansion of (x0 + y0 I)^m with I^2 = -1: even i feed alpha with
  // sign (-1)^{i/2}, odd i feed beta with sign (-1)^{(i-1)/2}.
  double alpha = 0.0, beta = 0.0, binom = 1.0;
  for (int i = 0; i <= m; ++i) {
    const double term = binom * std::pow(x0, m - i) * std::pow(y0, i);
    if (i % 2 == 0)
      alpha += ((i / 2) % 2 ? -term : term);
    else
      beta += (((i - 1) / 2) % 2 ? -term : term);
    binom = binom * (m - i) / (i + 1);
  }
  return AlphaBeta{alpha, beta};
}

SphereZeroVerdict sphere_zero_test(const PowerSeries& series, double x0, double y0,
                                   const UnitOneVector& I1, const UnitOneVector& I2,
                                   double tol, std::uint64_t seed, int samples) {
  const int n = series.generators();
  if (I1.generators() != n || I2.generators() != n)
    throw DimensionMismatch("sphere_zero_test: units over wrong generator count");
  if (y0 <= 0.0)
    throw std::invalid_argument("sphere_zero_test: y0 must be positive");
  if (distance(I1, I2) <= tol)
    throw std::invalid_argument(
        "sphere_zero_test: the two slice units must be distinct");

  SphereZeroVerdict v{false, false, false, Multivector(n), Multivector(n),
                      0.0,   0.0,   0.0};
  v.root1_residual = series.eval(from_plane({x0, y0}, I1)).norm();
  v.root2_residual = series.eval(from_plane({x0, y0}, I2)).norm();
  v.root1 = v.root1_residual <= tol;
  v.root2 = v.root2_residual <= tol;

  for (std::size_t m = 0; m < series.term_count(); ++m) {
    const AlphaBeta ab = alpha_beta(x0, y0, static_cast<int>(m));
    v.alpha_sum += ab.alpha * series.coefficient(m);
    v.beta_sum += ab.beta * series.coefficient(m);
  }

  if (v.root1 && v.root2) {
    // Two distinct roots in the class force both coefficient sums to zero
    // ((I1 - I2) is invertible), hence zeros on the whole sphere.
    bool whole = v.alpha_sum.norm() <= tol && v.beta_sum.norm() <= tol;
    const SphereClass cls{x0, y0, n};
    for (const Paravector& p : sphere_sample(cls, samples, seed)) {
      v.max_sample_residual = std::max(v.max_sample_residual, series.eval(p).norm());
    }
    whole = whole && v.max_sample_residual <= 10.0 * tol;
    v.whole_sphere = whole;
  }
  return v;
}

double default_zero_tolerance(const PowerSeries& series, double x0, double y0) {
  const double base = std::max(1.0, std::abs(x0) + y0);
  double scale = 0.0, p = 1.0;
  for (std::size_t m = 0; m < series.term_count(); ++m) {
    scale += series.coefficient(m).norm() * p;
    p *= base;
  }
  return 1e-9 * std::max(1.0, scale);
}

}  // namespace sclif
