#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sclif/slice.hpp"
#include "test_util.hpp"

using namespace sclif;
using testutil::max_abs_coeff_diff;
using testutil::random_multivector;
using testutil::random_unit;

TEST_CASE("unit 1-vectors normalize and square to -1") {
  const UnitOneVector I({3.0, 4.0, 0.0});
  CHECK(I.components()[0] == doctest::Approx(0.6));
  CHECK(I.components()[1] == doctest::Approx(0.8));
  const Multivector sq = I.to_multivector() * I.to_multivector();
  CHECK(max_abs_coeff_diff(sq, Multivector::scalar(3, -1.0)) <= 1e-15);

  const UnitOneVector e2 = UnitOneVector::axis(3, 2);
  CHECK(e2.components() == std::vector<double>{0.0, 1.0, 0.0});
  CHECK_THROWS_AS(UnitOneVector({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(UnitOneVector::axis(3, 4), std::invalid_argument);
}

TEST_CASE("slice_unit follows the 1-vector part, real axis falls back") {
  const UnitOneVector I = slice_unit(Paravector(2.0, {0.0, 3.0, 0.0}));
  CHECK(I.components() == std::vector<double>{0.0, 1.0, 0.0});

  // Points on the real axis take the fallback, e1 unless overridden.
  const UnitOneVector def = slice_unit(Paravector::real(3, 5.0));
  CHECK(def.components() == std::vector<double>{1.0, 0.0, 0.0});
  const UnitOneVector e3 = UnitOneVector::axis(3, 3);
  const UnitOneVector alt = slice_unit(Paravector::real(3, 5.0), e3);
  CHECK(alt.components() == std::vector<double>{0.0, 0.0, 1.0});

  // A vector part at the relative threshold still counts as real.
  const UnitOneVector tiny =
      slice_unit(Paravector(2.0, {0.0, 1e-14, 0.0}));
  CHECK(tiny.components()[0] == 1.0);
}

TEST_CASE("plane coordinates round trip and reject off-plane points") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const UnitOneVector I = random_unit(3, rng);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const std::complex<double> z(u(rng), u(rng));
    const Paravector x = from_plane(z, I);
    const std::complex<double> back = plane_coordinate(x, I);
    CHECK(std::abs(back - z) <= 1e-12);
  }

  const UnitOneVector e1 = UnitOneVector::axis(3, 1);
  CHECK_THROWS_AS((void)plane_coordinate(Paravector(0.0, {1.0, 0.5, 0.0}), e1),
                  std::domain_error);
  // Within tolerance the projection wins.
  const auto z = plane_coordinate(Paravector(1.0, {2.0, 1e-12, 0.0}), e1);
  CHECK(z == std::complex<double>(1.0, 2.0));
}

TEST_CASE("slice points carry a nonnegative height") {
  const Paravector p(1.5, {0.0, -2.0, 0.0});
  const SlicePoint sp = SlicePoint::from_paravector(p);
  CHECK(sp.x == 1.5);
  CHECK(sp.y == doctest::Approx(2.0));
  CHECK(sp.I.components()[1] == doctest::Approx(-1.0));
  const Paravector back = sp.embed();
  CHECK((back - p).norm() <= 1e-14);

  const SlicePoint real_point = SlicePoint::from_paravector(Paravector::real(3, 2.0));
  CHECK(real_point.y == 0.0);
  CHECK(real_point.x == 2.0);
}

TEST_CASE("frame completion produces an orthonormal anticommuting family") {
  std::mt19937_64 rng(22);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const SliceFrame frame = SliceFrame::complete(random_unit(n, rng));
      REQUIRE(frame.generators() == n);
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const Multivector ir = frame.basis()[r].to_multivector();
          const Multivector is = frame.basis()[s].to_multivector();
          const Multivector anti = ir * is + is * ir;
          const double expected = (r == s) ? -2.0 : 0.0;
          CHECK(max_abs_coeff_diff(anti, Multivector::scalar(n, expected))
                <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("frame blades are ascending-index products of the basis") {
  std::mt19937_64 rng(23);
  const SliceFrame frame = SliceFrame::complete(random_unit(3, rng));
  const Multivector i1 = frame.basis()[0].to_multivector();
  const Multivector i2 = frame.basis()[1].to_multivector();
  const Multivector i3 = frame.basis()[2].to_multivector();
  CHECK(max_abs_coeff_diff(frame.blade(0), Multivector::scalar(3, 1.0)) == 0.0);
  CHECK(max_abs_coeff_diff(frame.blade(0b011), i1 * i2) <= 1e-15);
  CHECK(max_abs_coeff_diff(frame.blade(0b110), i2 * i3) <= 1e-15);
  CHECK(max_abs_coeff_diff(frame.blade(0b111), i1 * (i2 * i3)) <= 1e-14);
}

TEST_CASE("change of basis is orthogonal") {
  std::mt19937_64 rng(24);
  for (int n : {2, 3}) {
    const SliceFrame frame = SliceFrame::complete(random_unit(n, rng));
    const std::vector<double> B = frame.change_of_basis();
    const std::size_t dim = std::size_t{1} << n;
    REQUIRE(B.size() == dim * dim);
    for (std::size_t c1 = 0; c1 < dim; ++c1) {
      for (std::size_t c2 = 0; c2 < dim; ++c2) {
        double d = 0.0;
        for (std::size_t r = 0; r < dim; ++r) d += B[r * dim + c1] * B[r * dim + c2];
        CHECK(d == doctest::Approx(c1 == c2 ? 1.0 : 0.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("split and unsplit invert each other") {
  std::mt19937_64 rng(25);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 40; ++trial) {
      const SliceFrame frame = SliceFrame::complete(random_unit(n, rng), trial);
      const Multivector v = random_multivector(n, rng);
      const SplitComponents comps = split(v, frame);

      // Exactly one component per subset of {2..n}: masks with bit 0 clear.
      REQUIRE(comps.size() == (std::size_t{1} << (n - 1)));
      for (const auto& [mask, z] : comps) CHECK((mask & 1u) == 0);

      CHECK(max_abs_coeff_diff(unsplit(comps, frame), v) <= 1e-12);

      // The literal sum (re + im I1) I_A rebuilds the element as well.
      Multivector rebuilt(n);
      const Multivector i1 = frame.basis()[0].to_multivector();
      for (const auto& [mask, z] : comps) {
        const Multivector head =
            Multivector::scalar(n, z.real()) + z.imag() * i1;
        rebuilt += head * frame.blade(mask);
      }
      CHECK(max_abs_coeff_diff(rebuilt, v) <= 1e-12);
    }
  }
}

TEST_CASE("split against the standard frame reads off coefficient pairs") {
  // Frame grown from e1 keeps the standard basis, so F_A pairs the
  // coefficient of e_A with the coefficient of e_{1A}.
  std::mt19937_64 rng(26);
  const SliceFrame frame = SliceFrame::complete(UnitOneVector::axis(4, 1));
  const Multivector v = random_multivector(4, rng);
  const SplitComponents comps = split(v, frame);
  for (const auto& [mask, z] : comps) {
    CHECK(z.real() == v[mask]);
    CHECK(z.imag() == v[mask | 1u]);
  }
}

TEST_CASE("unsplit rejects missing and stray keys") {
  const SliceFrame frame = SliceFrame::complete(UnitOneVector::axis(3, 1));
  SplitComponents comps = split(Multivector::scalar(3, 1.0), frame);
  SplitComponents missing = comps;
  missing.erase(missing.begin());
  CHECK_THROWS_AS((void)unsplit(missing, frame), std::invalid_argument);
  SplitComponents stray = comps;
  stray[1u] = {0.0, 0.0};  // bit 0 set: not a subset of {2..n}
  CHECK_THROWS_AS((void)unsplit(stray, frame), std::invalid_argument);
}

TEST_CASE("values on the plane of I1 split into the scalar component") {
  std::mt19937_64 rng(27);
  const UnitOneVector I = random_unit(3, rng);
  const SliceFrame frame = SliceFrame::complete(I);
  const Paravector x = from_plane({0.7, -1.2}, I);
  const SplitComponents comps = split(x.to_multivector(), frame);
  for (const auto& [mask, z] : comps) {
    if (mask == 0) {
      CHECK(z.real() == doctest::Approx(0.7));
      CHECK(z.imag() == doctest::Approx(-1.2));
    } else {
      CHECK(std::abs(z) <= 1e-13);
    }
  }
}

TEST_CASE("equivalence classes carry center and radius") {
  const SphereClass c = equivalence_class(Paravector(2.0, {0.0, 3.0, 0.0}));
  CHECK(c.center == 2.0);
  CHECK(c.radius == doctest::Approx(3.0));
  CHECK(c.n == 3);
  const SphereClass real_class = equivalence_class(Paravector::real(3, -1.0));
  CHECK(real_class.radius == 0.0);
}

TEST_CASE("sphere samples sit on the class and repeat with the seed") {
  const SphereClass c{1.5, 0.75, 4};
  const auto pts = sphere_sample(c, 25, 99);
  REQUIRE(pts.size() == 25);
  for (const Paravector& p : pts) {
    CHECK(p.scalar() == 1.5);
    CHECK(p.vec_norm() == doctest::Approx(0.75).epsilon(1e-12));
  }
  const auto again = sphere_sample(c, 25, 99);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK((pts[i] - again[i]).norm() == 0.0);

  const auto degenerate = sphere_sample(SphereClass{2.0, 0.0, 3}, 3, 1);
  for (const Paravector& p : degenerate) {
    CHECK(p.scalar() == 2.0);
    CHECK(p.vec_norm() == 0.0);
  }
}
