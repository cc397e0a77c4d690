#include <doctest.h>

#include <limits>
#include <random>
#include <string>
#include <vector>

#include "sclif/series_json.hpp"
#include "test_util.hpp"

using namespace sclif;
using testutil::max_abs_coeff_diff;
using testutil::random_multivector;

namespace {

bool same_coefficients(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.generators() != b.generators()) return false;
  const std::size_t reg =
      std::max(a.regular().term_count(), b.regular().term_count());
  for (std::size_t m = 0; m < reg; ++m) {
    const Multivector av = m < a.regular().term_count()
                               ? a.regular().coefficient(m)
                               : Multivector(a.generators());
    const Multivector bv = m < b.regular().term_count()
                               ? b.regular().coefficient(m)
                               : Multivector(b.generators());
    if (max_abs_coeff_diff(av, bv) != 0.0) return false;
  }
  const std::size_t pri = std::max(a.principal().size(), b.principal().size());
  for (std::size_t k = 0; k < pri; ++k) {
    const Multivector av =
        k < a.principal().size() ? a.principal()[k] : Multivector(a.generators());
    const Multivector bv =
        k < b.principal().size() ? b.principal()[k] : Multivector(b.generators());
    if (max_abs_coeff_diff(av, bv) != 0.0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("a minimal series file parses") {
  const LaurentSeries s =
      parse_series_text(R"({"n": 2, "regular": [{"m": 0, "blades": {"": 1}}]})");
  CHECK(s.generators() == 2);
  CHECK(s.regular().term_count() == 1);
  CHECK(s.regular().coefficient(0).scalar_part() == 1.0);
  CHECK(!s.has_principal());
}

TEST_CASE("blade keys select generators, gaps fill with zeros") {
  const LaurentSeries s = parse_series_text(R"({
    "n": 3,
    "regular": [
      {"m": 3, "blades": {"13": -2.5, "2": 1.0}},
      {"m": 1, "blades": {"123": 4.0}}
    ],
    "principal": [{"m": 2, "blades": {"": 0.5}}]
  })");
  REQUIRE(s.regular().term_count() == 4);
  CHECK(s.regular().coefficient(0).norm() == 0.0);
  CHECK(s.regular().coefficient(1)[0b111] == 4.0);
  CHECK(s.regular().coefficient(2).norm() == 0.0);
  CHECK(s.regular().coefficient(3)[0b101] == -2.5);
  CHECK(s.regular().coefficient(3)[0b010] == 1.0);
  REQUIRE(s.principal().size() == 2);
  CHECK(s.principal()[0].norm() == 0.0);
  CHECK(s.principal()[1].scalar_part() == 0.5);
}

TEST_CASE("wide algebras use comma separated keys") {
  const LaurentSeries s = parse_series_text(
      R"({"n": 11, "regular": [{"m": 0, "blades": {"2,11": 1.5}}]})");
  const Mask mask = (Mask{1} << 1) | (Mask{1} << 10);
  CHECK(s.regular().coefficient(0)[mask] == 1.5);
}

TEST_CASE("schema violations name the offending field") {
  const auto message_of = [](const std::string& text) {
    try {
      (void)parse_series_text(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(message_of(R"({"regular": []})").find("'n'") != std::string::npos);
  CHECK(message_of(R"({"n": 0, "regular": []})").find("'n'") != std::string::npos);
  CHECK(message_of(R"({"n": 13, "regular": []})").find("'n'") !=
        std::string::npos);
  CHECK(message_of(R"({"n": 3})").find("regular") != std::string::npos);
  CHECK(message_of(R"({"n": 3, "regular": [], "extra": 1})").find("extra") !=
        std::string::npos);
  CHECK(message_of(R"({"n": 3, "regular": [{"m": 0}]})").find("blades") !=
        std::string::npos);
  CHECK(message_of(R"({"n": 3, "regular": [{"blades": {}}]})").find(".m") !=
        std::string::npos);
  CHECK(message_of(
            R"({"n": 3, "regular": [{"m": 0, "blades": {}, "x": 1}]})")
            .find("'x'") != std::string::npos);

  // Non-ascending, out-of-range and duplicate blade keys.
  CHECK(message_of(R"({"n": 3, "regular": [{"m": 0, "blades": {"31": 1}}]})")
            .find("31") != std::string::npos);
  CHECK(message_of(R"({"n": 3, "regular": [{"m": 0, "blades": {"4": 1}}]})")
            .find("4") != std::string::npos);
  CHECK(message_of(
            R"({"n": 3, "regular": [{"m": 0, "blades": {"1": 1, "1": 2}}]})")
            .find("duplicate key '1'") != std::string::npos);

  // Duplicate and negative degrees.
  CHECK(message_of(R"({"n": 3, "regular": [
          {"m": 1, "blades": {"": 1}}, {"m": 1, "blades": {"": 2}}]})")
            .find("duplicate degree") != std::string::npos);
  CHECK(message_of(R"({"n": 3, "regular": [{"m": -1, "blades": {"": 1}}]})")
            .find(">= 0") != std::string::npos);
  CHECK(message_of(R"({"n": 3, "principal": [{"m": 0, "blades": {"": 1}}],
                       "regular": []})")
            .find(">= 1") != std::string::npos);

  // Overflowing numbers are rejected with the offending token named.
  CHECK(message_of(R"({"n": 3, "regular": [{"m": 0, "blades": {"": 1e999}}]})")
            .find("1e999") != std::string::npos);

  // Bad JSON reports position diagnostics.
  const std::string bad = message_of("{\"n\": 3,\n  !}");
  CHECK(bad.find("JSON parse error") != std::string::npos);
  CHECK(bad.find("line 2") != std::string::npos);
}

TEST_CASE("serialization is canonical and byte stable") {
  const LaurentSeries s = parse_series_text(R"({
    "n": 3,
    "regular": [
      {"m": 0, "blades": {"": 1.0, "13": 0.0}},
      {"m": 1, "blades": {}},
      {"m": 2, "blades": {"2": -0.5}}
    ]
  })");
  const std::string canonical = serialize_series(s);
  // Zero blades and the all-zero degree-1 entry drop out of the output.
  CHECK(canonical.find("\"13\"") == std::string::npos);
  CHECK(canonical.find("\"m\": 1,") == std::string::npos);
  CHECK(canonical.back() == '\n');
  // Parsing what was serialized and serializing again changes nothing.
  CHECK(serialize_series(parse_series_text(canonical)) == canonical);
}

TEST_CASE("random series round trip through text exactly") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<Multivector> reg;
    const int deg = static_cast<int>(rng() % 5);
    for (int m = 0; m <= deg; ++m) reg.push_back(random_multivector(n, rng));
    std::vector<Multivector> pri;
    const int pdeg = static_cast<int>(rng() % 3);
    for (int k = 0; k < pdeg; ++k) pri.push_back(random_multivector(n, rng));
    const LaurentSeries s(PowerSeries(std::move(reg)), std::move(pri), 0.0,
                          std::numeric_limits<double>::infinity());

    const std::string text = serialize_series(s);
    const LaurentSeries back = parse_series_text(text);
    CHECK(same_coefficients(s, back));
    CHECK(serialize_series(back) == text);
  }
}

TEST_CASE("paravector literals") {
  const Paravector a = parse_paravector("1.5+2e1-0.5e3", 3);
  CHECK(a.scalar() == 1.5);
  CHECK(a.vec() == std::vector<double>{2.0, 0.0, -0.5});

  CHECK(parse_paravector("7", 2).scalar() == 7.0);
  CHECK(parse_paravector("-e2", 2).vec()[1] == -1.0);
  CHECK(parse_paravector("e1", 2).vec()[0] == 1.0);
  CHECK(parse_paravector(" 1 + 2e1 ", 2).vec()[0] == 2.0);
  // 'e' binds a generator index, never a scientific exponent.
  const Paravector sci = parse_paravector("1.5e2", 3);
  CHECK(sci.scalar() == 0.0);
  CHECK(sci.vec()[1] == 1.5);
  // Repeated terms accumulate.
  CHECK(parse_paravector("e1+e1", 2).vec()[0] == 2.0);

  CHECK_THROWS_AS((void)parse_paravector("", 3), ParseError);
  CHECK_THROWS_AS((void)parse_paravector("1+", 3), ParseError);
  CHECK_THROWS_AS((void)parse_paravector("1 2", 3), ParseError);
  CHECK_THROWS_AS((void)parse_paravector("e9", 3), ParseError);
  CHECK_THROWS_AS((void)parse_paravector("e0", 3), ParseError);
  CHECK_THROWS_AS((void)parse_paravector("x", 3), ParseError);
  CHECK_THROWS_AS((void)parse_paravector("1.2.3", 3), ParseError);
}

TEST_CASE("file parsing reports missing paths") {
  CHECK_THROWS_AS((void)parse_series("/nonexistent/path.json"), ParseError);
}
