#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sclif/zeros.hpp"
#include "test_util.hpp"

using namespace sclif;
using testutil::random_multivector;
using testutil::random_paravector;
using testutil::random_unit;

namespace {

PowerSeries real_series(std::vector<double> values, int n) {
  std::vector<Multivector> coeffs;
  for (double v : values) coeffs.push_back(Multivector::scalar(n, v));
  return PowerSeries(std::move(coeffs));
}

}  // namespace

TEST_CASE("characteristic quadratic coefficients") {
  const CharacteristicQuadratic q =
      characteristic_quadratic(Paravector(2.0, {3.0, 0.0, 0.0}));
  CHECK(q.c1 == -4.0);
  CHECK(q.c0 == 13.0);

  // Real points give the squared linear factor (x - r)^2.
  const CharacteristicQuadratic real_q =
      characteristic_quadratic(Paravector::real(3, -1.5));
  CHECK(real_q.c1 == 3.0);
  CHECK(real_q.c0 == 2.25);

  // The discriminant c1^2 - 4 c0 = -4 |vec|^2 never goes positive.
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Paravector s = random_paravector(3, rng);
    const CharacteristicQuadratic qq = characteristic_quadratic(s);
    CHECK(qq.c1 * qq.c1 - 4.0 * qq.c0 ==
          doctest::Approx(-4.0 * s.vec_norm() * s.vec_norm()).epsilon(1e-12));
  }
}

TEST_CASE("class quadratic residual agrees with the coordinate formula") {
  // For a paravector (x0, v) the residual splits into a scalar part
  // x0^2 - |v|^2 + c1 x0 + c0 and a vector part (2 x0 + c1) v.
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Paravector x = random_paravector(3, rng);
    const double c1 = u(rng), c0 = u(rng);
    const double vn = x.vec_norm();
    const double scalar = x.scalar() * x.scalar() - vn * vn + c1 * x.scalar() + c0;
    const double vec = (2.0 * x.scalar() + c1) * vn;
    const double expected = std::sqrt(scalar * scalar + vec * vec);
    CHECK(class_quadratic_residual(x.to_multivector(), c1, c0) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("membership by quadratic matches membership by coordinates") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Paravector s = random_paravector(3, rng);
    Paravector x = random_paravector(3, rng);
    if (trial % 2 == 0) {
      // Place x on the class of s: same real part, rescaled vector part.
      const double vn = x.vec_norm();
      if (vn < 1e-9) continue;
      std::vector<double> vec = x.vec();
      for (double& cmp : vec) cmp *= s.vec_norm() / vn;
      x = Paravector(s.scalar(), vec);
    }
    const bool by_coords =
        std::abs(x.scalar() - s.scalar()) <= 1e-8 &&
        std::abs(x.vec_norm() - s.vec_norm()) <= 1e-8;
    CHECK(is_in_class(x, s, 1e-7 * std::max(1.0, s.norm_squared())) == by_coords);
  }

  CHECK(is_in_class(Paravector(2.0, {0.0, 3.0, 0.0}),
                    Paravector(2.0, {3.0, 0.0, 0.0})));
  CHECK(!is_in_class(Paravector(2.0, {0.0, 2.0, 0.0}),
                     Paravector(2.0, {3.0, 0.0, 0.0})));
}

TEST_CASE("the quadratic does not characterize general multivectors") {
  // 1 - e123 satisfies no real quadratic built from its scalar part and norm:
  // the residual is exactly 2 by direct multiplication.
  Multivector v = Multivector::scalar(3, 1.0);
  v[0b111] = -1.0;
  CHECK(quadratic_counterexample_check(v) == 2.0);

  // On paravectors the residual vanishes identically.
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const Paravector x = random_paravector(3, rng);
    CHECK(quadratic_counterexample_check(x.to_multivector()) <= 1e-13);
  }

  // e12 happens to satisfy its quadratic (it squares to -1), which is why
  // the counterexample needs the grade-3 blade.
  CHECK(quadratic_counterexample_check(Multivector::blade(3, 0b011)) <= 1e-15);
}

TEST_CASE("alpha and beta match actual powers on every slice") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int trial = 0; trial < 30; ++trial) {
    const double x0 = u(rng);
    const double y0 = std::abs(u(rng)) + 0.05;
    const UnitOneVector I = random_unit(3, rng);
    const Paravector x = from_plane({x0, y0}, I);
    for (int m = 0; m <= 12; ++m) {
      const AlphaBeta ab = alpha_beta(x0, y0, m);
      const Paravector xm = power(x, m);
      const Paravector expected =
          Paravector::real(3, ab.alpha) + ab.beta * I.to_paravector();
      CHECK((xm - expected).norm() <= 1e-12 * std::max(1.0, xm.norm()));
    }
  }
  const AlphaBeta sq = alpha_beta(0.3, 0.4, 2);
  CHECK(sq.alpha == doctest::Approx(0.09 - 0.16));
  CHECK(sq.beta == doctest::Approx(2 * 0.3 * 0.4));
  CHECK_THROWS_AS((void)alpha_beta(0.3, 0.4, -1), std::invalid_argument);
}

TEST_CASE("x^2 + 1 vanishes on the whole unit sphere") {
  const PowerSeries f = real_series({1.0, 0.0, 1.0}, 3);
  const SphereZeroVerdict v =
      sphere_zero_test(f, 0.0, 1.0, UnitOneVector::axis(3, 1),
                       UnitOneVector::axis(3, 2), 1e-12);
  CHECK(v.root1);
  CHECK(v.root2);
  CHECK(v.whole_sphere);
  CHECK(v.root1_residual <= 1e-14);
  CHECK(v.alpha_sum.norm() <= 1e-14);
  CHECK(v.beta_sum.norm() <= 1e-14);
  CHECK(v.max_sample_residual <= 1e-13);
}

TEST_CASE("conjugate root pairs force sphere zero sets") {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int trial = 0; trial < 10; ++trial) {
    const double x0 = u(rng);
    const double y0 = std::abs(u(rng)) + 0.2;
    const PowerSeries q = real_series({x0 * x0 + y0 * y0, -2.0 * x0, 1.0}, 3);
    std::vector<Multivector> gc;
    for (int m = 0; m <= 3; ++m) gc.push_back(random_multivector(3, rng));
    const PowerSeries f = multiply_real(q, PowerSeries(std::move(gc)));

    const UnitOneVector I1 = random_unit(3, rng);
    const UnitOneVector I2 = random_unit(3, rng);
    const double tol = default_zero_tolerance(f, x0, y0);
    const SphereZeroVerdict v = sphere_zero_test(f, x0, y0, I1, I2, tol);
    CAPTURE(x0);
    CAPTURE(y0);
    CHECK(v.whole_sphere);
    CHECK(v.alpha_sum.norm() <= tol);
    CHECK(v.beta_sum.norm() <= tol);
  }
}

TEST_CASE("a single root does not spread over the sphere") {
  const double y0 = 0.7;
  std::vector<Multivector> coeffs = {
      Multivector::blade(3, 0b001, -y0),  // -y0 e1
      Multivector::scalar(3, 1.0)};
  const PowerSeries f = PowerSeries(std::move(coeffs));
  const SphereZeroVerdict v =
      sphere_zero_test(f, 0.0, y0, UnitOneVector::axis(3, 1),
                       UnitOneVector::axis(3, 2), 1e-10);
  CHECK(v.root1);
  CHECK(!v.root2);
  CHECK(!v.whole_sphere);
  CHECK(v.root2_residual == doctest::Approx(y0 * std::sqrt(2.0)));
}

TEST_CASE("sphere zero test validates its slice units") {
  const PowerSeries f = real_series({1.0, 0.0, 1.0}, 3);
  const UnitOneVector e1 = UnitOneVector::axis(3, 1);
  CHECK_THROWS_AS((void)sphere_zero_test(f, 0.0, 1.0, e1, e1, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)sphere_zero_test(f, 0.0, -1.0, e1, UnitOneVector::axis(3, 2), 1e-10),
      std::invalid_argument);
}

TEST_CASE("default tolerance scales with the series and the point") {
  const PowerSeries f = real_series({1.0, 1.0}, 3);
  CHECK(default_zero_tolerance(f, 0.0, 1.0) == doctest::Approx(2e-9));
  const PowerSeries big = real_series({1e6}, 3);
  CHECK(default_zero_tolerance(big, 0.0, 1.0) == doctest::Approx(1e-3));
  // Larger evaluation points weigh high degrees more.
  CHECK(default_zero_tolerance(f, 3.0, 1.0) == doctest::Approx(5e-9));
}
