#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "sclif/multivector.hpp"
#include "test_util.hpp"

using namespace sclif;
using testutil::max_abs_coeff_diff;
using testutil::random_multivector;
using testutil::random_paravector;
using testutil::random_paravector_min_norm;

namespace {

// Independent product oracle: write both blades as generator strings,
// concatenate, then normalize by adjacent swaps (each flips the sign) and
// e_i e_i = -1 eliminations until sorted and duplicate free.
std::pair<double, Mask> reordering_oracle(Mask a, Mask b) {
  std::vector<int> idx;
  for (int i = 0; i < kMaxGenerators; ++i)
    if ((a >> i) & 1u) idx.push_back(i);
  for (int i = 0; i < kMaxGenerators; ++i)
    if ((b >> i) & 1u) idx.push_back(i);

  double sign = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      if (idx[k] == idx[k + 1]) {
        idx.erase(idx.begin() + static_cast<long>(k),
                  idx.begin() + static_cast<long>(k) + 2);
        sign = -sign;
        changed = true;
        break;
      }
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }

  Mask mask = 0;
  for (int i : idx) mask |= Mask{1} << i;
  return {sign, mask};
}

}  // namespace

TEST_CASE("blade product sign matches the reordering oracle on every pair") {
  for (int n = 1; n <= 5; ++n) {
    const Mask count = Mask{1} << n;
    for (Mask a = 0; a < count; ++a) {
      for (Mask b = 0; b < count; ++b) {
        const auto [sign, mask] = reordering_oracle(a, b);
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(blade_sign(a, b) == sign);
        CHECK((a ^ b) == mask);
      }
    }
  }
}

TEST_CASE("geometric product agrees with an oracle-signed convolution") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Multivector a = random_multivector(n, rng);
      const Multivector b = random_multivector(n, rng);
      Multivector expected(n);
      for (Mask i = 0; i < a.size(); ++i)
        for (Mask j = 0; j < b.size(); ++j) {
          const auto [sign, mask] = reordering_oracle(i, j);
          expected[mask] += sign * (a[i] * b[j]);
        }
      CHECK(max_abs_coeff_diff(a * b, expected) <= 1e-14);
    }
  }
}

TEST_CASE("defining relations e_i e_j + e_j e_i = -2 delta_ij") {
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Multivector ei = Multivector::blade(n, Mask{1} << (i - 1));
        const Multivector ej = Multivector::blade(n, Mask{1} << (j - 1));
        const Multivector anti = ei * ej + ej * ei;
        const double expected = (i == j) ? -2.0 : 0.0;
        CHECK(anti.scalar_part() == expected);
        CHECK(max_abs_coeff_diff(anti, Multivector::scalar(n, expected)) == 0.0);
      }
    }
  }
}

TEST_CASE("frozen products") {
  SUBCASE("e2 e1 = -e12") {
    const Multivector p =
        Multivector::blade(2, 0b10) * Multivector::blade(2, 0b01);
    CHECK(p[0b11] == -1.0);
    CHECK(p.norm() == 1.0);
  }
  SUBCASE("e123 squares to +1") {
    const Multivector v = Multivector::blade(3, 0b111);
    const Multivector sq = v * v;
    CHECK(sq.scalar_part() == 1.0);
    CHECK(sq.norm() == 1.0);
  }
  SUBCASE("(1 + e1 + e2)^2 = -1 + 2 e1 + 2 e2") {
    Multivector x = Multivector::scalar(2, 1.0);
    x[0b01] = 1.0;
    x[0b10] = 1.0;
    const Multivector sq = x * x;
    Multivector expected = Multivector::scalar(2, -1.0);
    expected[0b01] = 2.0;
    expected[0b10] = 2.0;
    CHECK(max_abs_coeff_diff(sq, expected) == 0.0);
  }
}

TEST_CASE("product is associative and distributes over addition") {
  std::mt19937_64 rng(12);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Multivector a = random_multivector(n, rng);
      const Multivector b = random_multivector(n, rng);
      const Multivector c = random_multivector(n, rng);
      CHECK(max_abs_coeff_diff((a * b) * c, a * (b * c)) <= 1e-13);
      CHECK(max_abs_coeff_diff(a * (b + c), a * b + a * c) <= 1e-13);
      CHECK(max_abs_coeff_diff((b + c) * a, b * a + c * a) <= 1e-13);
    }
  }
}

TEST_CASE("grade projections partition the element") {
  std::mt19937_64 rng(13);
  const Multivector v = random_multivector(4, rng);
  Multivector sum(4);
  for (int k = 0; k <= 4; ++k) {
    const Multivector part = v.grade(k);
    for (Mask m = 0; m < part.size(); ++m)
      if (blade_grade(m) != k) CHECK(part[m] == 0.0);
    sum += part;
  }
  CHECK(max_abs_coeff_diff(sum, v) == 0.0);
  CHECK_THROWS_AS((void)v.grade(5), std::invalid_argument);
  CHECK_THROWS_AS((void)v.grade(-1), std::invalid_argument);
}

TEST_CASE("inner and wedge parts reassemble the grade-1 product exactly") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector a(3), b(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (Mask m : {Mask{1}, Mask{2}, Mask{4}}) {
      a[m] = u(rng);
      b[m] = u(rng);
    }
    const InnerWedge iw = inner_wedge(a, b);

    // <a,b> = -sum a_i b_i under e_i^2 = -1.
    double dot = 0.0;
    for (Mask m : {Mask{1}, Mask{2}, Mask{4}}) dot += a[m] * b[m];
    CHECK(iw.scalar == doctest::Approx(-dot).epsilon(1e-14));

    const Multivector rebuilt =
        Multivector::scalar(3, iw.scalar) + iw.wedge;
    CHECK(max_abs_coeff_diff(rebuilt, a * b) == 0.0);
    for (Mask m = 0; m < iw.wedge.size(); ++m)
      if (blade_grade(m) != 2) CHECK(iw.wedge[m] == 0.0);
  }
  CHECK_THROWS_AS((void)inner_wedge(Multivector::scalar(3, 1.0),
                                    Multivector::blade(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("blade keys round trip for every mask") {
  for (int n : {3, 9, 12}) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      CHECK(parse_blade_key(blade_key(m), n) == m);
    }
  }
  CHECK(blade_key(0) == "");
  CHECK(blade_key(0b101) == "13");
  CHECK(blade_key((Mask{1} << 1) | (Mask{1} << 10)) == "2,11");
  CHECK(parse_blade_key("", 3) == 0);
  CHECK_THROWS_AS((void)parse_blade_key("31", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_blade_key("11", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_blade_key("4", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_blade_key("0", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_blade_key("1,,2", 12), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_blade_key("2,1", 12), std::invalid_argument);
}

TEST_CASE("paravector inverse and conjugate") {
  std::mt19937_64 rng(15);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Paravector x = random_paravector_min_norm(n, rng, 0.1);
      const Paravector inv = x.inverse();
      const Multivector prod = x.to_multivector() * inv.to_multivector();
      CHECK(max_abs_coeff_diff(prod, Multivector::scalar(n, 1.0)) <= 1e-12);

      // x xbar = |x|^2 exactly as multivectors.
      const Multivector xxbar =
          x.to_multivector() * x.conjugate().to_multivector();
      CHECK(max_abs_coeff_diff(xxbar, Multivector::scalar(n, x.norm_squared()))
            <= 1e-13);
    }
  }
  CHECK_THROWS_AS((void)Paravector::zero(3).inverse(), std::domain_error);
}

TEST_CASE("paravector products are norm multiplicative on both sides") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Paravector u = random_paravector(3, rng);
    const Paravector v = random_paravector(3, rng);
    const Multivector uv = u.to_multivector() * v.to_multivector();
    CHECK(uv.norm() == doctest::Approx(u.norm() * v.norm()).epsilon(1e-12));

    // Also against a full multivector on the right: left factors scale norms.
    const Multivector w = random_multivector(3, rng);
    CHECK((u.to_multivector() * w).norm() ==
          doctest::Approx(u.norm() * w.norm()).epsilon(1e-12));
  }
}

TEST_CASE("integer powers agree with repeated products") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Paravector x = random_paravector_min_norm(3, rng, 0.2);
    Multivector acc = Multivector::scalar(3, 1.0);
    for (int m = 0; m <= 6; ++m) {
      CHECK(max_abs_coeff_diff(power(x, m).to_multivector(), acc) <= 1e-12);
      acc = acc * x.to_multivector();
    }
    const Multivector neg =
        power(x, -3).to_multivector() * power(x, 3).to_multivector();
    CHECK(max_abs_coeff_diff(neg, Multivector::scalar(3, 1.0)) <= 1e-11);
  }
  CHECK_THROWS_AS((void)power(Paravector::zero(3), -1), std::domain_error);
}

TEST_CASE("paravector_part keeps scalar and grade one only") {
  std::mt19937_64 rng(18);
  const Multivector v = random_multivector(3, rng);
  const Paravector p = paravector_part(v);
  CHECK(p.scalar() == v[0]);
  CHECK(p.vec()[0] == v[0b001]);
  CHECK(p.vec()[1] == v[0b010]);
  CHECK(p.vec()[2] == v[0b100]);
}

TEST_CASE("mixed generator counts are rejected") {
  const Multivector a = Multivector::scalar(2, 1.0);
  const Multivector b = Multivector::scalar(3, 1.0);
  CHECK_THROWS_AS((void)(a * b), DimensionMismatch);
  CHECK_THROWS_AS((void)(a + b), DimensionMismatch);
  CHECK_THROWS_AS((void)(a - b), DimensionMismatch);
}

TEST_CASE("rendering names blades in ascending order") {
  Multivector v = Multivector::scalar(3, 1.0);
  v[0b001] = 2.0;
  v[0b101] = -0.5;
  CHECK(to_string(v) == "1 + 2 e1 - 0.5 e13");
  CHECK(to_string(Multivector(3)) == "0");
}
