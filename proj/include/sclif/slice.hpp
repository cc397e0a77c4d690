#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sclif/multivector.hpp"

namespace sclif {

/// Function of a paravector variable with Clifford values, the common
/// currency of the series and quadrature layers.
using SliceEvaluator = std::function<Multivector(const Paravector&)>;

// Points with a 1-vector part below this (relative) threshold count as real.
inline constexpr double kRealAxisTol = 1e-13;

/// Unit 1-vector I, I^2 = -1. Components are normalized on construction.
class UnitOneVector {
 public:
  explicit UnitOneVector(std::vector<double> comps);
  static UnitOneVector axis(int n, int index);  // e_index, 1-based

  int generators() const { return static_cast<int>(comps_.size()); }
  const std::vector<double>& components() const { return comps_; }

  Multivector to_multivector() const;
  Paravector to_paravector() const;

 private:
  std::vector<double> comps_;
};

double dot(const UnitOneVector& a, const UnitOneVector& b);
double distance(const UnitOneVector& a, const UnitOneVector& b);

/// I_x: the direction of the 1-vector part of x. Points on the real axis
/// (|vec| <= kRealAxisTol * max(1, |x0|)) take the fallback unit, e_1 by default.
UnitOneVector slice_unit(const Paravector& x);
UnitOneVector slice_unit(const Paravector& x, const UnitOneVector& fallback);

/// Complex coordinate x0 + iy of a point on the plane L_I = R + IR. Throws
/// std::domain_error when x is off the plane by more than tol * max(1, |x|).
std::complex<double> plane_coordinate(const Paravector& x, const UnitOneVector& I,
                                      double tol = 1e-10);

/// The point x + Iy of L_I with complex coordinate z = x + iy.
Paravector from_plane(std::complex<double> z, const UnitOneVector& I);

/// Canonical slice coordinates of a point: y >= 0 always, since the unit is
/// taken along the 1-vector part itself.
struct SlicePoint {
  UnitOneVector I;
  double x;
  double y;

  static SlicePoint from_paravector(const Paravector& p);
  Paravector embed() const;
};

/// Orthonormal completion I_1..I_n of a unit 1-vector, together with the
/// induced blades I_A. Blade factors are ordered by ascending index.
class SliceFrame {
 public:
  /// Gram-Schmidt against the standard basis, skipping candidates whose
  /// residual falls under the pivot tolerance 1e-8; seeded random candidates
  /// take over if the standard basis is exhausted.
  static SliceFrame complete(const UnitOneVector& i1, std::uint64_t seed = 0);

  int generators() const { return static_cast<int>(basis_.size()); }
  const std::vector<UnitOneVector>& basis() const { return basis_; }

  /// I_A for the subset encoded by mask (bit k <=> I_{k+1} appears).
  const Multivector& blade(Mask a) const { return blades_[a]; }

  /// Row-major 2^n x 2^n matrix whose column A holds the standard-blade
  /// coefficients of I_A. Orthogonal, so the inverse is the transpose.
  std::vector<double> change_of_basis() const;

 private:
  SliceFrame() = default;
  std::vector<UnitOneVector> basis_;
  std::vector<Multivector> blades_;
};

/// Splitting data: value = sum_A (re_A + im_A I_1) I_A over subsets A of
/// {2..n}. Keys are the I_A masks, so bit 0 is always clear.
using SplitComponents = std::map<Mask, std::complex<double>>;

SplitComponents split(const Multivector& value, const SliceFrame& frame);

/// Inverse of split. Throws std::invalid_argument when a subset key is
/// missing or a stray key is present.
Multivector unsplit(const SplitComponents& comps, const SliceFrame& frame);

/// The (n-1)-sphere { x0 + y0 I : I unit 1-vector } through s: all points
/// sharing s's real part and 1-vector norm.
struct SphereClass {
  double center;
  double radius;
  int n;
};

SphereClass equivalence_class(const Paravector& s);

/// Deterministic samples from the class: normalized Gaussian directions
/// scaled to the radius. A radius-0 class returns its center repeatedly.
std::vector<Paravector> sphere_sample(const SphereClass& c, int count,
                                      std::uint64_t seed);

}  // namespace sclif
