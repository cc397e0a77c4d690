#pragma once

#include <vector>

#include "sclif/series.hpp"

namespace sclif {

/// Circle of the given radius around a real center, traversed
/// counterclockwise in the plane L_I: zeta(t) = center + radius e^{It}.
struct ContourSpec {
  UnitOneVector I;
  double center;
  double radius;
  int nodes;

  ContourSpec(UnitOneVector unit, double center_, double radius_, int nodes_ = 256);
};

struct QuadratureReport {
  Multivector value;  // composite-trapezoid result at node_count nodes
  int node_count;
  double est_error;   // norm of the difference against the 2N refinement
};

/// Cauchy reproduction (1/2pi) int (zeta - x)^{-1} dzeta_I f(zeta) with
/// dzeta_I = -dzeta I; per node the measure collapses to radius e^{I t}.
/// Products are taken left to right: kernel, measure, then f(zeta).
/// x must sit on the contour plane, strictly inside with margin 1e-3 radius.
QuadratureReport cauchy_eval(const SliceEvaluator& f, const Paravector& x,
                             const ContourSpec& c);

/// Outer integral minus inner integral, both contours centered at 0 on the
/// same plane; x must lie inside the open annulus.
QuadratureReport annulus_cauchy_eval(const SliceEvaluator& f, const Paravector& x,
                                     const ContourSpec& outer,
                                     const ContourSpec& inner);

/// a_limit - (1/2pi) int (zeta - x)^{-1} dzeta_I f(zeta) for |x| beyond the
/// contour radius; a_limit is the value of f at infinity.
QuadratureReport exterior_cauchy_eval(const SliceEvaluator& f, const Paravector& x,
                                      const Multivector& a_limit,
                                      const ContourSpec& c);

/// a_m = (1/2pi) int zeta^{-m-1} dzeta_I f(zeta), contour centered at 0.
Multivector taylor_coefficient(const SliceEvaluator& f, int m, const ContourSpec& c);

/// b_m = (1/2pi) int zeta^{m-1} dzeta_I f(zeta) for m >= 1, contour centered at 0.
Multivector laurent_coefficient(const SliceEvaluator& f, int m, const ContourSpec& c);

/// Plain int dzeta f(zeta) (no 1/2pi, plain measure). Vanishes on slice
/// monogenic integrands; generically nonzero otherwise.
Multivector closed_curve_integral(const SliceEvaluator& f, const ContourSpec& c);

struct CauchyEstimate {
  int order;
  double lhs;  // norm of the order-th Taylor coefficient
  double rhs;  // max_contour ||f|| / r^order
  bool ok;
};

/// Derivative bounds (1/m!)|d^m f(0)| <= M_I / r^m for orders 0..max_order,
/// with M_I the max of ||f|| over the contour nodes.
std::vector<CauchyEstimate> cauchy_estimate_check(const SliceEvaluator& f, double r,
                                                  const UnitOneVector& I,
                                                  int max_order, int nodes = 256,
                                                  double slack = 1e-9);

}  // namespace sclif
