#include "sclif/contour.hpp"

#include <cmath>
#include <numbers>

namespace sclif {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInteriorMargin = 1e-3;  // of the radius, per side

Multivector embed_on_plane(std::complex<double> w, const UnitOneVector& I) {
  Multivector out(I.generators());
  out[0] = w.real();
  for (int i = 0; i < I.generators(); ++i)
    out[Mask{1} << i] = w.imag() * I.components()[i];
  return out;
}

// Complex integer power by repeated multiplication; exponents stay small.
std::complex<double> ipow(std::complex<double> z, int m) {
  if (m < 0) return ipow(1.0 / z, -m);
  std::complex<double> out(1.0, 0.0);
  for (int i = 0; i < m; ++i) out *= z;
  return out;
}

// One composite-trapezoid pass over the contour at the given node count.
// kernel(theta, zeta) supplies the on-plane complex factor multiplying
// f(zeta) from the left; the uniform weight 1/N or 2pi/N is the caller's.
template <typename Kernel>
Multivector contour_pass(const SliceEvaluator& f, const ContourSpec& c, int nodes,
                         const Kernel& kernel) {
  Multivector acc(c.I.generators());
  for (int j = 0; j < nodes; ++j) {
    const double theta = kTwoPi * j / nodes;
    const std::complex<double> zc =
        c.center + c.radius * std::polar(1.0, theta);
    acc += embed_on_plane(kernel(theta, zc), c.I) * f(from_plane(zc, c.I));
  }
  return acc;
}

// Cauchy kernel factor against the point zx; the measure -dzeta I collapses
// to radius e^{I theta} per node.
Multivector cauchy_pass(const SliceEvaluator& f, const ContourSpec& c, int nodes,
                        std::complex<double> zx) {
  return contour_pass(f, c, nodes, [&](double theta, std::complex<double> zc) {
    const std::complex<double> d = zc - zx;
    if (std::abs(d) < 1e-13 * c.radius)
      throw std::domain_error("contour node coincides with the evaluation point");
    return (1.0 / d) * (c.radius * std::polar(1.0, theta)) / static_cast<double>(nodes);
  });
}

void require_centered(const ContourSpec& c, const char* what) {
  if (c.center != 0.0)
    throw std::invalid_argument(std::string(what) + " requires a contour centered at 0");
}

}  // namespace

ContourSpec::ContourSpec(UnitOneVector unit, double center_, double radius_, int nodes_)
    : I(std::move(unit)), center(center_), radius(radius_), nodes(nodes_) {
  if (!(radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
  if (nodes < 8) throw std::invalid_argument("contour needs at least 8 nodes");
}

QuadratureReport cauchy_eval(const SliceEvaluator& f, const Paravector& x,
                             const ContourSpec& c) {
  const std::complex<double> zx = plane_coordinate(x, c.I);
  if (std::abs(zx - c.center) > c.radius * (1.0 - kInteriorMargin))
    throw std::domain_error("cauchy_eval: point must lie strictly inside the contour");
  Multivector value = cauchy_pass(f, c, c.nodes, zx);
  Multivector refined = cauchy_pass(f, c, 2 * c.nodes, zx);
  const double est = (value - refined).norm();
  return QuadratureReport{std::move(value), c.nodes, est};
}

QuadratureReport annulus_cauchy_eval(const SliceEvaluator& f, const Paravector& x,
                                     const ContourSpec& outer,
                                     const ContourSpec& inner) {
  require_centered(outer, "annulus_cauchy_eval");
  require_centered(inner, "annulus_cauchy_eval");
  if (distance(inner.I, outer.I) > 1e-12)
    throw std::invalid_argument(
        "annulus contours must share a slice plane and orientation");
  if (!(inner.radius < outer.radius))
    throw std::invalid_argument("annulus needs inner radius < outer radius");
  const std::complex<double> zx = plane_coordinate(x, outer.I);
  const double a = std::abs(zx);
  if (!(a > inner.radius && a < outer.radius))
    throw std::domain_error("annulus_cauchy_eval: point outside the open annulus");
  const auto both = [&](int scale) {
    return cauchy_pass(f, outer, scale * outer.nodes, zx) -
           cauchy_pass(f, inner, scale * inner.nodes, zx);
  };
  Multivector value = both(1);
  const double est = (value - both(2)).norm();
  return QuadratureReport{std::move(value), outer.nodes, est};
}

QuadratureReport exterior_cauchy_eval(const SliceEvaluator& f, const Paravector& x,
                                      const Multivector& a_limit,
                                      const ContourSpec& c) {
  require_centered(c, "exterior_cauchy_eval");
  if (a_limit.generators() != c.I.generators())
    throw DimensionMismatch("exterior_cauchy_eval: limit over wrong generator count");
  const std::complex<double> zx = plane_coordinate(x, c.I);
  if (!(std::abs(zx) > c.radius))
    throw std::domain_error("exterior_cauchy_eval: point must lie outside the contour");
  Multivector value = a_limit - cauchy_pass(f, c, c.nodes, zx);
  Multivector refined = a_limit - cauchy_pass(f, c, 2 * c.nodes, zx);
  const double est = (value - refined).norm();
  return QuadratureReport{std::move(value), c.nodes, est};
}

Multivector taylor_coefficient(const SliceEvaluator& f, int m, const ContourSpec& c) {
  require_centered(c, "taylor_coefficient");
  if (m < 0) throw std::invalid_argument("taylor_coefficient: order must be >= 0");
  return contour_pass(f, c, c.nodes, [&](double theta, std::complex<double> zc) {
    return ipow(zc, -m - 1) * (c.radius * std::polar(1.0, theta)) /
           static_cast<double>(c.nodes);
  });
}

Multivector laurent_coefficient(const SliceEvaluator& f, int m, const ContourSpec& c) {
  require_centered(c, "laurent_coefficient");
  if (m < 1) throw std::invalid_argument("laurent_coefficient: order must be >= 1");
  return contour_pass(f, c, c.nodes, [&](double theta, std::complex<double> zc) {
    return ipow(zc, m - 1) * (c.radius * std::polar(1.0, theta)) /
           static_cast<double>(c.nodes);
  });
}

Multivector closed_curve_integral(const SliceEvaluator& f, const ContourSpec& c) {
  // Plain measure dzeta = radius I e^{I theta} dtheta, no Cauchy kernel and
  // no 1/2pi normalization.
  return contour_pass(f, c, c.nodes, [&](double theta, std::complex<double>) {
    return std::complex<double>(0.0, 1.0) * c.radius * std::polar(1.0, theta) *
           (kTwoPi / c.nodes);
  });
}

std::vector<CauchyEstimate> cauchy_estimate_check(const SliceEvaluator& f, double r,
                                                  const UnitOneVector& I,
                                                  int max_order, int nodes,
                                                  double slack) {
  if (!(r > 0.0)) throw std::invalid_argument("cauchy_estimate_check: radius must be > 0");
  if (max_order < 0) throw std::invalid_argument("cauchy_estimate_check: bad max order");
  const ContourSpec c(I, 0.0, r, nodes);

  // Evaluate once per node, reuse for the sup norm and for every order.
  std::vector<Multivector> values;
  std::vector<std::complex<double>> zetas;
  values.reserve(nodes);
  zetas.reserve(nodes);
  double sup = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = kTwoPi * j / nodes;
    const std::complex<double> zc = r * std::polar(1.0, theta);
    zetas.push_back(zc);
    values.push_back(f(from_plane(zc, I)));
    sup = std::max(sup, values.back().norm());
  }

  std::vector<CauchyEstimate> out;
  out.reserve(max_order + 1);
  for (int order = 0; order <= max_order; ++order) {
    Multivector coeff(I.generators());
    for (int j = 0; j < nodes; ++j) {
      const double theta = kTwoPi * j / nodes;
      const std::complex<double> k =
          ipow(zetas[j], -order - 1) * (r * std::polar(1.0, theta)) /
          static_cast<double>(nodes);
      coeff += embed_on_plane(k, I) * values[j];
    }
    const double lhs = coeff.norm();
    const double rhs = sup / std::pow(r, order);
    out.push_back(CauchyEstimate{order, lhs, rhs, lhs <= rhs + slack});
  }
  return out;
}

}  // namespace sclif
