#include "sclif/slice.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace sclif {

namespace {

double vec_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double vec_norm(const std::vector<double>& a) { return std::sqrt(vec_dot(a, a)); }

}  // namespace

UnitOneVector::UnitOneVector(std::vector<double> comps) : comps_(std::move(comps)) {
  if (comps_.empty() || static_cast<int>(comps_.size()) > kMaxGenerators)
    throw std::invalid_argument("unit 1-vector needs 1 to " +
                                std::to_string(kMaxGenerators) + " components");
  const double n = vec_norm(comps_);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero 1-vector");
  for (double& c : comps_) c /= n;
}

UnitOneVector UnitOneVector::axis(int n, int index) {
  if (index < 1 || index > n)
    throw std::invalid_argument("axis index " + std::to_string(index) +
                                " out of [1, " + std::to_string(n) + "]");
  std::vector<double> c(n, 0.0);
  c[index - 1] = 1.0;
  return UnitOneVector(std::move(c));
}

Multivector UnitOneVector::to_multivector() const {
  Multivector out(generators());
  for (std::size_t i = 0; i < comps_.size(); ++i) out[Mask{1} << i] = comps_[i];
  return out;
}

Paravector UnitOneVector::to_paravector() const { return Paravector(0.0, comps_); }

double dot(const UnitOneVector& a, const UnitOneVector& b) {
  if (a.generators() != b.generators())
    throw DimensionMismatch("dot: units over different generator counts");
  return vec_dot(a.components(), b.components());
}

double distance(const UnitOneVector& a, const UnitOneVector& b) {
  if (a.generators() != b.generators())
    throw DimensionMismatch("distance: units over different generator counts");
  double s = 0.0;
  for (int i = 0; i < a.generators(); ++i) {
    const double d = a.components()[i] - b.components()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

UnitOneVector slice_unit(const Paravector& x) {
  return slice_unit(x, UnitOneVector::axis(x.generators(), 1));
}

UnitOneVector slice_unit(const Paravector& x, const UnitOneVector& fallback) {
  if (x.generators() != fallback.generators())
    throw DimensionMismatch("slice_unit: fallback over wrong generator count");
  const double r = x.vec_norm();
  if (r <= kRealAxisTol * std::max(1.0, std::abs(x.scalar()))) return fallback;
  return UnitOneVector(x.vec());
}

std::complex<double> plane_coordinate(const Paravector& x, const UnitOneVector& I,
                                      double tol) {
  if (x.generators() != I.generators())
    throw DimensionMismatch("plane_coordinate: point and unit disagree");
  const double y = vec_dot(x.vec(), I.components());
  // Residual of the projection, computed componentwise: the r^2 - y^2 form
  // loses half the mantissa to cancellation and flags on-plane points.
  double off2 = 0.0;
  for (std::size_t i = 0; i < x.vec().size(); ++i) {
    const double d = x.vec()[i] - y * I.components()[i];
    off2 += d * d;
  }
  const double off = std::sqrt(off2);
  if (off > tol * std::max(1.0, x.norm())) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", off);
    throw std::domain_error(std::string("point is off the slice plane by ") + buf);
  }
  return {x.scalar(), y};
}

Paravector from_plane(std::complex<double> z, const UnitOneVector& I) {
  std::vector<double> vec(I.generators());
  for (int i = 0; i < I.generators(); ++i) vec[i] = z.imag() * I.components()[i];
  return Paravector(z.real(), std::move(vec));
}

SlicePoint SlicePoint::from_paravector(const Paravector& p) {
  return SlicePoint{slice_unit(p), p.scalar(), p.vec_norm()};
}

Paravector SlicePoint::embed() const { return from_plane({x, y}, I); }

SliceFrame SliceFrame::complete(const UnitOneVector& i1, std::uint64_t seed) {
  const int n = i1.generators();
  constexpr double kPivotTol = 1e-8;

  std::vector<std::vector<double>> basis{i1.components()};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int standard_next = 0;
  int attempts = 0;
  while (static_cast<int>(basis.size()) < n) {
    if (++attempts > 64 * n)
      throw std::runtime_error("frame completion failed to find independent vectors");
    std::vector<double> cand(n, 0.0);
    if (standard_next < n) {
      cand[standard_next++] = 1.0;
    } else {
      for (double& c : cand) c = u(rng);
    }
    for (int pass = 0; pass < 2; ++pass) {  // twice for orthogonality quality
      for (const auto& b : basis) {
        const double d = vec_dot(cand, b);
        for (int i = 0; i < n; ++i) cand[i] -= d * b[i];
      }
    }
    const double nn = vec_norm(cand);
    if (nn <= kPivotTol) continue;  // near-dependent, try the next candidate
    for (double& c : cand) c /= nn;
    basis.push_back(std::move(cand));
  }

  SliceFrame frame;
  frame.basis_.reserve(n);
  for (auto& b : basis) frame.basis_.emplace_back(std::move(b));

  const std::size_t size = std::size_t{1} << n;
  frame.blades_.reserve(size);
  frame.blades_.push_back(Multivector::scalar(n, 1.0));
  std::vector<Multivector> basis_mv;
  basis_mv.reserve(n);
  for (const auto& b : frame.basis_) basis_mv.push_back(b.to_multivector());
  for (Mask m = 1; m < size; ++m) {
    const int h = std::bit_width(m) - 1;  // append the largest index on the right
    frame.blades_.push_back(frame.blades_[m ^ (Mask{1} << h)] * basis_mv[h]);
  }
  return frame;
}

std::vector<double> SliceFrame::change_of_basis() const {
  const std::size_t dim = blades_.size();
  std::vector<double> m(dim * dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row)
      m[row * dim + col] = blades_[col][static_cast<Mask>(row)];
  return m;
}

SplitComponents split(const Multivector& value, const SliceFrame& frame) {
  if (value.generators() != frame.generators())
    throw DimensionMismatch("split: value and frame disagree");
  const std::size_t size = value.size();
  SplitComponents out;
  // Blades are orthonormal in the coefficient inner product, so coordinates
  // are plain dot products (the transpose of the change-of-basis matrix).
  for (Mask m = 0; m < size; m += 2) {
    double re = 0.0, im = 0.0;
    const auto& even = frame.blade(m).coefficients();
    const auto& odd = frame.blade(m | 1).coefficients();
    const auto& v = value.coefficients();
    for (std::size_t i = 0; i < size; ++i) {
      re += v[i] * even[i];
      im += v[i] * odd[i];
    }
    out.emplace(m, std::complex<double>(re, im));
  }
  return out;
}

Multivector unsplit(const SplitComponents& comps, const SliceFrame& frame) {
  const int n = frame.generators();
  const std::size_t size = std::size_t{1} << n;
  for (const auto& [mask, value] : comps) {
    (void)value;
    if (mask >= size || (mask & 1))
      throw std::invalid_argument("unsplit: stray component key " + std::to_string(mask));
  }
  Multivector out(n);
  for (Mask m = 0; m < size; m += 2) {
    const auto it = comps.find(m);
    if (it == comps.end())
      throw std::invalid_argument("unsplit: missing component for blade key '" +
                                  blade_key(m) + "'");
    out += it->second.real() * frame.blade(m);
    out += it->second.imag() * frame.blade(m | 1);
  }
  return out;
}

SphereClass equivalence_class(const Paravector& s) {
  return SphereClass{s.scalar(), s.vec_norm(), s.generators()};
}

std::vector<Paravector> sphere_sample(const SphereClass& c, int count,
                                      std::uint64_t seed) {
  std::vector<Paravector> out;
  if (count <= 0) return out;
  out.reserve(count);
  if (c.radius == 0.0) {
    out.assign(count, Paravector::real(c.n, c.center));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> v(c.n);
    double s2 = 0.0;
    for (double& x : v) {
      x = g(rng);
      s2 += x * x;
    }
    const double nn = std::sqrt(s2);
    if (nn < 1e-12) continue;
    for (double& x : v) x *= c.radius / nn;
    out.emplace_back(c.center, std::move(v));
  }
  return out;
}

}  // namespace sclif
