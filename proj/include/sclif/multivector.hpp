#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sclif {

// Generator cap keeps the dense coefficient vector at 2^12 doubles worst case.
inline constexpr int kMaxGenerators = 12;

/// Operands live in algebras with different generator counts.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Basis blade e_A as a bitmask: bit i set <=> generator e_{i+1} appears in A.
using Mask = std::uint32_t;

inline int blade_grade(Mask a) { return std::popcount(a); }

/// Sign of e_A e_B under e_i e_j + e_j e_i = -2 delta_ij: transposition count
/// for interleaving the two ascending generator strings, plus one -1 per
/// shared generator (e_i^2 = -1).
double blade_sign(Mask a, Mask b);

/// Canonical blade spelling: "" for the scalar, "13" for e1 e3. Indices above
/// 9 switch the whole key to comma-separated form ("2,11") to stay unambiguous.
std::string blade_key(Mask a);

/// Inverse of blade_key. Throws std::invalid_argument when an index is out of
/// [1, n] or the indices are not strictly ascending.
Mask parse_blade_key(const std::string& key, int n);

/// Dense element of the Clifford algebra R_n over n generators.
class Multivector {
 public:
  explicit Multivector(int n);

  static Multivector scalar(int n, double value);
  static Multivector blade(int n, Mask mask, double value = 1.0);

  int generators() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }

  double operator[](Mask m) const {
    assert(m < coeffs_.size());
    return coeffs_[m];
  }
  double& operator[](Mask m) {
    assert(m < coeffs_.size());
    return coeffs_[m];
  }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double scalar_part() const { return coeffs_[0]; }

  /// Euclidean norm of the coefficient vector. On paravectors this agrees
  /// with the usual |x| = sqrt(x0^2 + sum x_i^2).
  double norm() const;
  double norm_squared() const;

  /// Projection onto the grade-k component. Throws when k is not in [0, n].
  Multivector grade(int k) const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector operator-() const;

 private:
  int n_;
  std::vector<double> coeffs_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);

/// Geometric product. The coefficient loop visits blade pairs in ascending
/// mask order; sums are therefore reproducible run to run.
Multivector operator*(const Multivector& a, const Multivector& b);

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return a * b;
}

Multivector grade_project(const Multivector& a, int k);

struct InnerWedge {
  double scalar;       // <a,b> = (ab + ba)/2, equals -sum a_i b_i here
  Multivector wedge;   // a ^ b = (ab - ba)/2
};

/// Decomposition ab = <a,b> + a^b for grade-1 inputs. The two parts are the
/// grade-0 and grade-2 projections of one product, so their sum reproduces
/// geometric_product(a, b) exactly.
InnerWedge inner_wedge(const Multivector& a, const Multivector& b);

/// x = x0 + x1 e_1 + ... + xn e_n, the paravector subspace of R_n.
class Paravector {
 public:
  Paravector(double x0, std::vector<double> vec);
  static Paravector zero(int n);
  static Paravector real(int n, double x0);

  int generators() const { return static_cast<int>(vec_.size()); }
  double scalar() const { return x0_; }
  const std::vector<double>& vec() const { return vec_; }

  double vec_norm() const;
  double norm() const;
  double norm_squared() const;

  Multivector to_multivector() const;

  /// x0 - x1 e_1 - ... - xn e_n.
  Paravector conjugate() const;

  /// conjugate / |x|^2; throws std::domain_error on the zero paravector.
  Paravector inverse() const;

  Paravector& operator+=(const Paravector& rhs);
  Paravector& operator-=(const Paravector& rhs);
  Paravector& operator*=(double s);
  Paravector operator-() const;

 private:
  double x0_;
  std::vector<double> vec_;
};

Paravector operator+(Paravector a, const Paravector& b);
Paravector operator-(Paravector a, const Paravector& b);
Paravector operator*(Paravector a, double s);
Paravector operator*(double s, Paravector a);

/// Integer power of a paravector, negative exponents through the inverse.
/// Computed by repeated geometric products; the result is projected back onto
/// the paravector subspace, which products of a point with itself never leave.
Paravector power(const Paravector& x, int m);

/// Scalar plus grade-1 components of v; any higher-grade content is dropped.
Paravector paravector_part(const Multivector& v);

/// Readable rendering such as "1 + 2 e1 - 0.5 e13" (debugging, error messages).
std::string to_string(const Multivector& v);

}  // namespace sclif
