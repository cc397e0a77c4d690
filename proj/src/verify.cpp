#include "sclif/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "sclif/contour.hpp"
#include "sclif/kernel.hpp"
#include "sclif/zeros.hpp"

namespace sclif {

namespace {

using Clock = std::chrono::steady_clock;

// Uniform record semantics: residual is a violation magnitude, so pass is
// always residual <= tol. Checks that need a quantity to stay LARGE report
// max(0, floor - measured) instead of the raw measurement.
void run_check(std::vector<CheckRecord>& out, const std::string& name,
               const std::string& anchor, double tol,
               const std::function<double()>& body) {
  const auto t0 = Clock::now();
  const double residual = body();
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  out.push_back(CheckRecord{name, anchor, residual, tol, residual <= tol, ms});
}

Multivector random_multivector(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Multivector v(n);
  for (Mask m = 0; m < v.size(); ++m) v[m] = u(rng);
  return v;
}

Paravector random_paravector(std::mt19937_64& rng, int n, double min_norm = 0.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double x0 = u(rng);
    std::vector<double> vec(n);
    for (double& c : vec) c = u(rng);
    Paravector p(x0, std::move(vec));
    if (p.norm() > min_norm) return p;
  }
}

UnitOneVector random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  for (;;) {
    std::vector<double> c(n);
    double ss = 0.0;
    for (double& x : c) {
      x = g(rng);
      ss += x * x;
    }
    if (ss > 1e-12) return UnitOneVector(std::move(c));
  }
}

// Coefficient norms clamped to <= 1 so contour and kernel bounds stay tame.
PowerSeries random_polynomial(std::mt19937_64& rng, int n, int degree) {
  std::vector<Multivector> a;
  a.reserve(degree + 1);
  for (int m = 0; m <= degree; ++m) {
    Multivector c = random_multivector(rng, n);
    if (const double norm = c.norm(); norm > 1.0) c *= 1.0 / norm;
    a.push_back(std::move(c));
  }
  return PowerSeries(std::move(a));
}

std::complex<double> random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace

int Report::passed() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckRecord& c) { return c.pass; }));
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::vector<CheckRecord> verify_split(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(cfg.seed);
  const int n = cfg.n;

  run_check(out, "split/defining_relations", "e_i e_j + e_j e_i = -2 delta_ij",
            cfg.tol, [&] {
              double worst = 0.0;
              for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                  const Multivector ei = Multivector::blade(n, Mask(1) << (i - 1));
                  const Multivector ej = Multivector::blade(n, Mask(1) << (j - 1));
                  Multivector anti = ei * ej + ej * ei;
                  if (i == j) anti[0] += 2.0;
                  worst = std::max(worst, anti.norm());
                }
              return worst;
            });

  run_check(out, "split/product_associativity", "(a b) c = a (b c)", cfg.tol, [&] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const Multivector a = random_multivector(rng, n);
      const Multivector b = random_multivector(rng, n);
      const Multivector c = random_multivector(rng, n);
      worst = std::max(worst, ((a * b) * c - a * (b * c)).norm());
    }
    return worst;
  });

  run_check(out, "split/paravector_inverse", "x x^{-1} = 1 for paravectors",
            cfg.tol, [&] {
              double worst = 0.0;
              for (int k = 0; k < 200; ++k) {
                const Paravector x = random_paravector(rng, n, 0.1);
                Multivector r = x.to_multivector() * x.inverse().to_multivector();
                r[0] -= 1.0;
                worst = std::max(worst, r.norm());
              }
              return worst;
            });

  run_check(out, "split/norm_multiplicativity",
            "|x v| = |x| |v| for paravector x and any v", cfg.tol, [&] {
              double worst = 0.0;
              for (int k = 0; k < 200; ++k) {
                const Paravector x = random_paravector(rng, n);
                const Multivector v = random_multivector(rng, n);
                const double lhs = (x.to_multivector() * v).norm();
                const double rhs = x.norm() * v.norm();
                worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + rhs));
              }
              return worst;
            });

  const UnitOneVector i1 = random_unit(rng, n);
  const SliceFrame frame = SliceFrame::complete(i1, cfg.seed);

  run_check(out, "split/frame_relations", "I_r I_s + I_s I_r = -2 delta_rs",
            cfg.tol, [&] {
              double worst = 0.0;
              for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                  const Multivector ir = frame.basis()[r].to_multivector();
                  const Multivector is = frame.basis()[s].to_multivector();
                  Multivector anti = ir * is + is * ir;
                  if (r == s) anti[0] += 2.0;
                  worst = std::max(worst, anti.norm());
                }
              return worst;
            });

  run_check(out, "split/change_of_basis_orthogonal",
            "B^T B = 1 for the blade change of basis", cfg.tol, [&] {
              const std::vector<double> b = frame.change_of_basis();
              const std::size_t dim = std::size_t(1) << n;
              double worst = 0.0;
              for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                  double dot = 0.0;
                  for (std::size_t k = 0; k < dim; ++k)
                    dot += b[k * dim + i] * b[k * dim + j];
                  worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
                }
              return worst;
            });

  run_check(out, "split/round_trip",
            "v = sum over A of (re_A + im_A I_1) I_A", cfg.tol, [&] {
              double worst = 0.0;
              for (int k = 0; k < 100; ++k) {
                const Multivector v = random_multivector(rng, n);
                const SplitComponents comps = split(v, frame);
                worst = std::max(worst, (unsplit(comps, frame) - v).norm());
                // Rebuild by the literal statement as well, with geometric
                // products instead of the transposed change of basis.
                Multivector rebuilt(n);
                const Multivector i1mv = frame.basis()[0].to_multivector();
                for (const auto& [mask, z] : comps) {
                  Multivector factor = Multivector::scalar(n, z.real());
                  factor += z.imag() * i1mv;
                  rebuilt += factor * frame.blade(mask);
                }
                worst = std::max(worst, (rebuilt - v).norm());
              }
              return worst;
            });

  run_check(out, "split/standard_frame_pairing",
            "on the standard frame component A pairs f_A with f_{1 union A}",
            cfg.tol, [&] {
              const SliceFrame std_frame =
                  SliceFrame::complete(UnitOneVector::axis(n, 1), cfg.seed);
              double worst = 0.0;
              for (int k = 0; k < 50; ++k) {
                const Multivector v = random_multivector(rng, n);
                for (const auto& [mask, z] : split(v, std_frame)) {
                  worst = std::max(worst, std::abs(z.real() - v[mask]));
                  worst = std::max(worst, std::abs(z.imag() - v[mask | 1]));
                }
              }
              return worst;
            });

  return out;
}

std::vector<CheckRecord> verify_cauchy(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(cfg.seed);
  const int n = cfg.n;

  const UnitOneVector I = random_unit(rng, n);
  const PowerSeries poly = random_polynomial(rng, n, 8);
  const SliceEvaluator fe = evaluator(poly);
  const ContourSpec unit_circle(I, 0.0, 1.0, cfg.nodes);

  std::vector<Paravector> interior;
  for (int k = 0; k < 20; ++k)
    interior.push_back(from_plane(random_disk_point(rng, 0.8), I));

  double doubling = 0.0;
  run_check(out, "cauchy/reproduction",
            "f(x) = (1/2pi) integral (zeta - x)^{-1} dzeta_I f(zeta)", cfg.tol,
            [&] {
              double worst = 0.0;
              for (const Paravector& x : interior) {
                const QuadratureReport q = cauchy_eval(fe, x, unit_circle);
                const Multivector direct = fe(x);
                worst = std::max(worst, (q.value - direct).norm() /
                                            std::max(1.0, direct.norm()));
                doubling = std::max(doubling, q.est_error);
              }
              return worst;
            });

  run_check(out, "cauchy/node_doubling",
            "doubling the node count leaves the value fixed", cfg.tol,
            [&] { return doubling; });

  run_check(out, "cauchy/taylor_slice_independence",
            "Taylor coefficients do not depend on the slice", cfg.tol, [&] {
              const UnitOneVector J = random_unit(rng, n);
              const ContourSpec on_j(J, 0.0, 1.0, cfg.nodes);
              double worst = 0.0;
              for (int m = 0; m <= 10; ++m) {
                const Multivector am = taylor_coefficient(fe, m, unit_circle);
                const Multivector bm = taylor_coefficient(fe, m, on_j);
                worst = std::max(worst, (am - bm).norm());
              }
              return worst;
            });

  run_check(out, "cauchy/taylor_recovers_coefficients",
            "a_m = (1/2pi) integral zeta^{-m-1} dzeta_I f(zeta)", cfg.tol, [&] {
              double worst = 0.0;
              for (int m = 0; m <= 10; ++m) {
                Multivector am = taylor_coefficient(fe, m, unit_circle);
                if (m < static_cast<int>(poly.term_count()))
                  am -= poly.coefficient(m);
                worst = std::max(worst, am.norm());
              }
              return worst;
            });

  // Finite Laurent series shared by the annulus and coefficient checks.
  std::vector<Multivector> principal;
  for (int m = 0; m < 3; ++m) {
    Multivector c = random_multivector(rng, n);
    if (const double norm = c.norm(); norm > 1.0) c *= 1.0 / norm;
    principal.push_back(std::move(c));
  }
  const LaurentSeries laurent(random_polynomial(rng, n, 4), principal, 0.0,
                              std::numeric_limits<double>::infinity());
  const SliceEvaluator le = evaluator(laurent);

  run_check(out, "cauchy/annulus_reconstruction",
            "f(x) = outer contour integral minus inner contour integral",
            cfg.tol, [&] {
              const ContourSpec outer(I, 0.0, 2.0, cfg.nodes);
              const ContourSpec inner(I, 0.0, 0.25, cfg.nodes);
              std::uniform_real_distribution<double> ru(0.4, 1.6);
              std::uniform_real_distribution<double> tu(0.0, 2.0 * std::numbers::pi);
              double worst = 0.0;
              for (int k = 0; k < 10; ++k) {
                const double r = ru(rng), t = tu(rng);
                const Paravector x =
                    from_plane({r * std::cos(t), r * std::sin(t)}, I);
                const QuadratureReport q = annulus_cauchy_eval(le, x, outer, inner);
                const Multivector direct = laurent.eval(x);
                worst = std::max(worst, (q.value - direct).norm() /
                                            std::max(1.0, direct.norm()));
              }
              return worst;
            });

  run_check(out, "cauchy/laurent_coefficients",
            "b_m = (1/2pi) integral zeta^{m-1} dzeta_I f(zeta)", cfg.tol, [&] {
              double worst = 0.0;
              for (int m = 1; m <= 5; ++m) {
                Multivector bm = laurent_coefficient(le, m, unit_circle);
                if (m <= static_cast<int>(principal.size()))
                  bm -= principal[m - 1];
                worst = std::max(worst, bm.norm());
              }
              return worst;
            });

  run_check(out, "cauchy/inversion_shift",
            "composing with x -> x^{-1} on a slice shifts a_m to b_m", cfg.tol,
            [&] {
              double worst = 0.0;
              for (const double y0 : {0.3, -0.5}) {
                // f(x) = sum_{m>=1} x^m y0^{m-1}: after inversion the Laurent
                // coefficients must read b_m = y0^{m-1}.
                std::vector<Multivector> a(41, Multivector(n));
                double p = 1.0;
                for (int m = 1; m <= 40; ++m) {
                  a[m] = Multivector::scalar(n, p);
                  p *= y0;
                }
                const LaurentSeries inv = compose_inversion(PowerSeries(a));
                const SliceEvaluator ie = evaluator(inv);
                double expect = 1.0;
                for (int m = 1; m <= 10; ++m) {
                  Multivector direct = inv.principal()[m - 1];
                  direct[0] -= expect;
                  worst = std::max(worst, direct.norm());
                  Multivector quad = laurent_coefficient(ie, m, unit_circle);
                  quad[0] -= expect;
                  worst = std::max(worst, quad.norm());
                  expect *= y0;
                }
              }
              return worst;
            });

  run_check(out, "cauchy/derivative_bounds",
            "(1/m!) |d^m f(0)| <= max |f| on the contour / r^m",
            std::max(cfg.tol, 1e-9), [&] {
              double worst = 0.0;
              for (const double r : {0.5, 0.9}) {
                for (const CauchyEstimate& e :
                     cauchy_estimate_check(fe, r, I, 10, cfg.nodes)) {
                  worst = std::max(worst, std::max(0.0, e.lhs - e.rhs));
                }
              }
              return worst;
            });

  run_check(out, "cauchy/series_monogenicity",
            "(d/dx0 + I d/dy) f = 0 on every slice for power series",
            std::max(cfg.tol, 1e-5), [&] {
              double worst = 0.0;
              for (int k = 0; k < 10; ++k) {
                const Paravector x = from_plane(random_disk_point(rng, 0.8), I);
                worst = std::max(
                    worst, monogenicity_residual(fe, SlicePoint::from_paravector(x))
                               .norm());
              }
              return worst;
            });

  run_check(out, "cauchy/monogenic_integral_vanishes",
            "closed curve integral of a power series is zero", cfg.tol,
            [&] { return closed_curve_integral(fe, unit_circle).norm(); });

  run_check(out, "cauchy/conjugation_detected",
            "x -> conj(x) integrates to 2 pi r^2 I and keeps residual >= 1/2",
            cfg.tol, [&] {
              const SliceEvaluator conj = [](const Paravector& x) {
                return x.conjugate().to_multivector();
              };
              Multivector integral = closed_curve_integral(conj, unit_circle);
              integral -= 2.0 * std::numbers::pi * I.to_multivector();
              double worst = integral.norm();
              double weakest = std::numeric_limits<double>::infinity();
              for (int k = 0; k < 5; ++k) {
                const Paravector x = from_plane(random_disk_point(rng, 0.8), I);
                weakest = std::min(
                    weakest,
                    monogenicity_residual(conj, SlicePoint::from_paravector(x))
                        .norm());
              }
              return std::max(worst, std::max(0.0, 0.5 - weakest));
            });

  return out;
}

std::vector<CheckRecord> verify_kernel(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(cfg.seed);
  const int n = cfg.n;
  const int N = std::max(1, cfg.terms);

  // Pairs with |p| <= 0.5 |s| and visibly noncommuting parts.
  std::vector<std::pair<Paravector, Paravector>> pairs;
  std::uniform_real_distribution<double> ratio_u(0.1, 0.5);
  while (pairs.size() < 50) {
    Paravector s = random_paravector(rng, n, 0.5);
    s = (1.5 / s.norm()) * s;
    Paravector p = random_paravector(rng, n, 0.05);
    p = (ratio_u(rng) * s.norm() / p.norm()) * p;
    const Multivector pm = p.to_multivector(), sm = s.to_multivector();
    if ((pm * sm - sm * pm).norm() < 1e-6) continue;
    pairs.emplace_back(std::move(p), std::move(s));
  }

  run_check(out, "kernel/series_matches_closed_form",
            "sum p^k s^{-1-k} = -(p^2 - 2 p Re[s] + |s|^2)^{-1} (p - conj(s))",
            cfg.tol, [&] {
              double worst = 0.0;
              for (const auto& [p, s] : pairs) {
                const Multivector diff =
                    kernel_series_sum(p, s, N) - kernel_closed_form(p, s);
                worst = std::max(worst, diff.norm());
              }
              return worst;
            });

  run_check(out, "kernel/two_sided_inverse",
            "the kernel inverse times the closed form is 1 in both orders",
            cfg.tol, [&] {
              double worst = 0.0;
              for (const auto& [p, s] : pairs) {
                const Multivector k = kernel_closed_form(p, s);
                const Multivector ki = kernel_inverse(p, s);
                Multivector left = ki * k;
                left[0] -= 1.0;
                Multivector right = k * ki;
                right[0] -= 1.0;
                worst = std::max(worst, std::max(left.norm(), right.norm()));
              }
              return worst;
            });

  run_check(out, "kernel/ss1_residual",
            "(2 p Re[s] - p^2 - |s|^2) sum p^k s^{-1-k} -> p + s - 2 Re[s]",
            cfg.tol, [&] {
              double worst = 0.0;
              for (const auto& [p, s] : pairs)
                worst = std::max(worst, verify_identity_ss1(p, s, N));
              return worst;
            });

  run_check(out, "kernel/ss1_decay_ratio",
            "successive truncation residuals shrink by the factor |p|/|s|", 0.1,
            [&] {
              // Early truncations only: past N ~ 15 the true residual sinks
              // under the rounding floor of the identity evaluation and the
              // measured ratio turns into noise.
              constexpr int lo = 2, hi = 10;
              double worst = 0.0;
              for (std::size_t k = 0; k < 10; ++k) {
                const auto& [p, s] = pairs[k];
                const double expect = kernel_tail_ratio(p, s);
                const double measured =
                    std::pow(verify_identity_ss1(p, s, hi) /
                                 verify_identity_ss1(p, s, lo),
                             1.0 / (hi - lo));
                worst = std::max(worst, std::abs(measured - expect) / expect);
              }
              return worst;
            });

  run_check(out, "kernel/singular_on_conjugate_class",
            "the closed form degenerates exactly on the class of conj(s)", 0.0,
            [&] {
              double violations = 0.0;
              for (int k = 0; k < 10; ++k) {
                const Paravector s = random_paravector(rng, n, 0.5);
                const SphereClass cls = equivalence_class(s.conjugate());
                for (const Paravector& x : sphere_sample(cls, 5, cfg.seed + k)) {
                  try {
                    kernel_closed_form(x, s);
                    violations += 1.0;  // expected SingularKernel
                  } catch (const SingularKernel&) {
                  }
                  const Paravector off(x.scalar() * 1.001 + 0.001,
                                       x.vec());
                  try {
                    kernel_closed_form(off, s);
                  } catch (const SingularKernel&) {
                    violations += 1.0;  // off-class must stay regular
                  }
                }
              }
              return violations;
            });

  run_check(out, "kernel/probe_blowup",
            "kernel norms grow monotonically approaching the class", 0.0, [&] {
              double violations = 0.0;
              for (int k = 0; k < 5; ++k) {
                const Paravector s = random_paravector(rng, n, 0.5);
                // Head for a class point away from conj(s): the limit point
                // s0 + |s_vec| u with u orthogonal to the 1-vector part.
                const UnitOneVector u = [&] {
                  for (;;) {
                    UnitOneVector cand = random_unit(rng, n);
                    std::vector<double> c = cand.components();
                    double d = 0.0, vv = 0.0;
                    for (int j = 0; j < n; ++j) {
                      d += c[j] * s.vec()[j];
                      vv += s.vec()[j] * s.vec()[j];
                    }
                    if (vv > 0.0)
                      for (int j = 0; j < n; ++j) c[j] -= d * s.vec()[j] / vv;
                    double norm = 0.0;
                    for (double x : c) norm += x * x;
                    if (norm > 1e-6) return UnitOneVector(std::move(c));
                  }
                }();
                std::vector<Paravector> path;
                for (const double t : {0.5, 0.9, 0.99, 0.999, 1.0}) {
                  std::vector<double> vec(n);
                  for (int j = 0; j < n; ++j)
                    vec[j] = t * s.vec_norm() * u.components()[j];
                  path.emplace_back(s.scalar(), std::move(vec));
                }
                const std::vector<ProbePoint> probes = singularity_probe(s, path);
                for (std::size_t j = 1; j < probes.size(); ++j)
                  if (!(probes[j].kernel_norm > probes[j - 1].kernel_norm))
                    violations += 1.0;
                if (std::isfinite(probes.back().kernel_norm)) violations += 1.0;
              }
              return violations;
            });

  run_check(out, "kernel/operator_ss1",
            "the truncation identity never uses commuting components", cfg.tol,
            [&] {
              std::normal_distribution<double> g;
              double worst = 0.0;
              const Paravector s(2.0, [&] {
                std::vector<double> v(n, 0.0);
                v[0] = 1.0;
                return v;
              }());
              for (int k = 0; k < 5; ++k) {
                std::vector<Eigen::MatrixXd> mats;
                double ss = 0.0;
                for (int j = 0; j <= n; ++j) {
                  Eigen::MatrixXd m(4, 4);
                  for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c) m(r, c) = g(rng);
                  ss += m.squaredNorm();
                  mats.push_back(std::move(m));
                }
                const double scale = 0.2 / std::sqrt(ss);
                for (Eigen::MatrixXd& m : mats) m *= scale;
                worst = std::max(
                    worst, verify_identity_ss1(OperatorParavector(n, mats), s, N));
              }
              return worst;
            });

  run_check(out, "kernel/operator_scalar_reduction",
            "1 x 1 matrix components reproduce the scalar sum bit for bit", 0.0,
            [&] {
              double worst = 0.0;
              for (int k = 0; k < 5; ++k) {
                const auto& [p, s] = pairs[k];
                std::vector<Eigen::MatrixXd> mats;
                mats.push_back(Eigen::MatrixXd::Constant(1, 1, p.scalar()));
                for (int j = 0; j < n; ++j)
                  mats.push_back(Eigen::MatrixXd::Constant(1, 1, p.vec()[j]));
                const MatrixMultivector op_sum =
                    operator_kernel_sum(OperatorParavector(n, mats), s, N);
                const Multivector scalar_sum = kernel_series_sum(p, s, N);
                for (Mask m = 0; m < scalar_sum.size(); ++m)
                  worst = std::max(worst,
                                   std::abs(op_sum[m](0, 0) - scalar_sum[m]));
              }
              return worst;
            });

  return out;
}

std::vector<CheckRecord> verify_zeros(const RunConfig& cfg) {
  std::vector<CheckRecord> out;
  std::mt19937_64 rng(cfg.seed);
  const int n = cfg.n;

  run_check(out, "zeros/class_quadratic",
            "x^2 - 2 Re[s] x + |s|^2 = 0 on the whole class of s", cfg.tol, [&] {
              double worst = 0.0;
              for (int k = 0; k < 20; ++k) {
                const Paravector s = random_paravector(rng, n);
                const CharacteristicQuadratic q = characteristic_quadratic(s);
                for (const Paravector& x :
                     sphere_sample(equivalence_class(s), 10, cfg.seed + k))
                  worst = std::max(worst, class_quadratic_residual(
                                              x.to_multivector(), q.c1, q.c0));
              }
              return worst;
            });

  run_check(out, "zeros/membership_routes_agree",
            "quadratic residual and (Re, norm) comparison give one verdict", 0.0,
            [&] {
              double disagreements = 0.0;
              for (int k = 0; k < 100; ++k) {
                const Paravector s = random_paravector(rng, n, 0.2);
                Paravector x = sphere_sample(equivalence_class(s), 1,
                                             cfg.seed + k)[0];
                if (k % 2 == 1) {
                  std::vector<double> vec = x.vec();
                  vec[0] += 1e-3;
                  x = Paravector(x.scalar() + 1e-3, std::move(vec));
                }
                const bool via_quadratic = is_in_class(x, s, 1e-10);
                const bool via_parts =
                    std::abs(x.scalar() - s.scalar()) <= 1e-6 &&
                    std::abs(x.vec_norm() - s.vec_norm()) <= 1e-6;
                if (via_quadratic != via_parts) disagreements += 1.0;
              }
              return disagreements;
            });

  run_check(out, "zeros/off_class_rejected",
            "perturbed points keep a visibly nonzero quadratic residual",
            cfg.tol, [&] {
              double weakest = std::numeric_limits<double>::infinity();
              for (int k = 0; k < 50; ++k) {
                const Paravector s = random_paravector(rng, n, 0.5);
                const CharacteristicQuadratic q = characteristic_quadratic(s);
                Paravector x = sphere_sample(equivalence_class(s), 1,
                                             cfg.seed + k)[0];
                x = Paravector(x.scalar() + 1e-3, x.vec());
                weakest = std::min(weakest, class_quadratic_residual(
                                                x.to_multivector(), q.c1, q.c0));
              }
              return std::max(0.0, 1e-6 - weakest);
            });

  run_check(out, "zeros/nonparavector_counterexample",
            "1 - e1 e2 e3 fails its own class quadratic with residual 2",
            cfg.tol, [&] {
              Multivector v = Multivector::scalar(3, 1.0);
              v[0b111] = -1.0;
              return std::abs(quadratic_counterexample_check(v) - 2.0);
            });

  run_check(out, "zeros/alpha_beta_matches_powers",
            "(x0 + y0 I)^m = alpha_m + beta_m I on every slice", cfg.tol, [&] {
              std::uniform_real_distribution<double> u(-0.8, 0.8);
              double worst = 0.0;
              for (int k = 0; k < 50; ++k) {
                const double x0 = u(rng);
                const double y0 = std::abs(u(rng)) + 0.05;
                const UnitOneVector I = random_unit(rng, n);
                const int m = static_cast<int>(rng() % 21);
                const AlphaBeta ab = alpha_beta(x0, y0, m);
                Multivector expect = ab.beta * I.to_multivector();
                expect[0] += ab.alpha;
                const Paravector x = from_plane({x0, y0}, I);
                worst = std::max(worst,
                                 (power(x, m).to_multivector() - expect).norm());
              }
              return worst;
            });

  std::uniform_real_distribution<double> coord(0.2, 1.0);

  run_check(out, "zeros/conjugate_pair_forces_sphere",
            "two distinct roots in one class put zeros on the whole sphere",
            cfg.tol, [&] {
              double worst = 0.0;
              for (int k = 0; k < 5; ++k) {
                const double x0 = coord(rng) - 0.6, y0 = coord(rng);
                // Real-coefficient quadratic with roots x0 +- y0 I on every
                // slice, times an arbitrary right factor.
                std::vector<Multivector> q{
                    Multivector::scalar(n, x0 * x0 + y0 * y0),
                    Multivector::scalar(n, -2.0 * x0), Multivector::scalar(n, 1.0)};
                const PowerSeries f =
                    multiply_real(PowerSeries(q), random_polynomial(rng, n, 4));
                const UnitOneVector I1 = random_unit(rng, n);
                UnitOneVector I2 = random_unit(rng, n);
                while (distance(I1, I2) < 0.1) I2 = random_unit(rng, n);
                const double tol = default_zero_tolerance(f, x0, y0);
                const SphereZeroVerdict v =
                    sphere_zero_test(f, x0, y0, I1, I2, tol, cfg.seed + k);
                if (!v.whole_sphere) return 1.0;
                worst = std::max({worst, v.root1_residual, v.root2_residual,
                                  v.alpha_sum.norm(), v.beta_sum.norm(),
                                  v.max_sample_residual});
              }
              return worst;
            });

  run_check(out, "zeros/single_root_stays_single",
            "one root alone never promotes to the whole class", 0.0, [&] {
              double violations = 0.0;
              for (int k = 0; k < 5; ++k) {
                const double y0 = coord(rng);
                const UnitOneVector I1 = random_unit(rng, n);
                UnitOneVector I2 = random_unit(rng, n);
                while (distance(I1, I2) < 0.1) I2 = random_unit(rng, n);
                std::vector<Multivector> a{-y0 * I1.to_multivector(),
                                           Multivector::scalar(n, 1.0)};
                const PowerSeries f{std::move(a)};
                const SphereZeroVerdict v =
                    sphere_zero_test(f, 0.0, y0, I1, I2, 1e-10, cfg.seed + k);
                if (!v.root1 || v.root2 || v.whole_sphere) violations += 1.0;
              }
              return violations;
            });

  return out;
}

Report run_verify(const RunConfig& cfg) {
  Report report;
  report.config = cfg;
  const auto append = [&](std::vector<CheckRecord> recs) {
    for (CheckRecord& r : recs) report.checks.push_back(std::move(r));
  };
  if (cfg.command == "verify-split") {
    append(verify_split(cfg));
  } else if (cfg.command == "verify-cauchy") {
    append(verify_cauchy(cfg));
  } else if (cfg.command == "verify-kernel") {
    append(verify_kernel(cfg));
  } else if (cfg.command == "verify-zeros") {
    append(verify_zeros(cfg));
  } else if (cfg.command == "verify-all") {
    append(verify_split(cfg));
    append(verify_cauchy(cfg));
    append(verify_kernel(cfg));
    append(verify_zeros(cfg));
  } else {
    throw std::invalid_argument("unknown verify command '" + cfg.command + "'");
  }
  return report;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["config"] = {{"command", r.config.command}, {"n", r.config.n},
                 {"nodes", r.config.nodes},     {"terms", r.config.terms},
                 {"tol", r.config.tol},         {"seed", r.config.seed},
                 {"format", r.config.format}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"residual", c.residual},
                           {"tol", c.tol},
                           {"pass", c.pass},
                           {"ms", c.ms}});
  }
  j["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}};
  return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "name,anchor,residual,tol,pass,ms\n";
  char buf[64];
  for (const CheckRecord& c : r.checks) {
    out << c.name << ',' << c.anchor << ',';
    std::snprintf(buf, sizeof buf, "%.17g", c.residual);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", c.tol);
    out << buf << ',' << (c.pass ? "true" : "false") << ',';
    std::snprintf(buf, sizeof buf, "%.6f", c.ms);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace sclif
