#include "sclif/series.hpp"

#include <cmath>
#include <iostream>

namespace sclif {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Embed the complex coordinate w of the plane spanned by 1 and the unit
// direction u as a multivector.
Multivector embed_on_plane(std::complex<double> w, const std::vector<double>& u) {
  Multivector out(static_cast<int>(u.size()));
  out[0] = w.real();
  for (std::size_t i = 0; i < u.size(); ++i) out[Mask{1} << i] = w.imag() * u[i];
  return out;
}

std::vector<double> unit_direction(const Paravector& x, double r) {
  std::vector<double> u(x.generators(), 0.0);
  if (r > 0.0)
    for (int i = 0; i < x.generators(); ++i) u[i] = x.vec()[i] / r;
  return u;
}

void check_real_coefficients(const PowerSeries& f, const char* what) {
  for (std::size_t m = 0; m < f.term_count(); ++m) {
    const Multivector& a = f.coefficient(m);
    const double tol = 1e-13 * std::max(1.0, a.norm());
    for (Mask b = 1; b < a.size(); ++b)
      if (std::abs(a[b]) > tol)
        throw std::invalid_argument(std::string(what) +
                                    ": coefficient of degree " + std::to_string(m) +
                                    " is not real (blade e" + blade_key(b) + ")");
  }
}

std::vector<double> real_coefficients(const PowerSeries& f) {
  std::vector<double> out(f.term_count());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = f.coefficient(m).scalar_part();
  return out;
}

}  // namespace

PowerSeries::PowerSeries(int n) : n_(n), radius_(kInf) {
  Multivector probe(n);  // validates n
  (void)probe;
}

PowerSeries::PowerSeries(std::vector<Multivector> coeffs, double radius)
    : coeffs_(std::move(coeffs)), radius_(radius) {
  if (coeffs_.empty())
    throw std::invalid_argument("empty coefficient list; use PowerSeries(n)");
  n_ = coeffs_.front().generators();
  for (const auto& c : coeffs_)
    if (c.generators() != n_)
      throw DimensionMismatch("power series coefficients over mixed generator counts");
}

Multivector PowerSeries::eval(const Paravector& x) const {
  if (x.generators() != n_)
    throw DimensionMismatch("eval: point over wrong generator count");
  // Stored series are finite, so out-of-radius evaluation is meaningful but
  // suspect: warn, do not fail.
  if (x.norm() > radius_)
    std::cerr << "sclif: warning: evaluation at |x| = " << x.norm()
              << " beyond the stored radius " << radius_ << "\n";
  Multivector acc(n_);
  const double r = x.vec_norm();
  const std::vector<double> u = unit_direction(x, r);
  std::complex<double> z(x.scalar(), r), zp(1.0, 0.0);
  for (const auto& a : coeffs_) {
    if (a.norm_squared() != 0.0) acc += embed_on_plane(zp, u) * a;
    zp *= z;
  }
  return acc;
}

LaurentSeries::LaurentSeries(PowerSeries regular, std::vector<Multivector> principal,
                             double inner_radius, double outer_radius)
    : regular_(std::move(regular)),
      principal_(std::move(principal)),
      inner_(inner_radius),
      outer_(outer_radius) {
  for (const auto& b : principal_)
    if (b.generators() != regular_.generators())
      throw DimensionMismatch("principal coefficients over wrong generator count");
}

bool LaurentSeries::has_principal() const {
  for (const auto& b : principal_)
    if (b.norm_squared() != 0.0) return true;
  return false;
}

Multivector LaurentSeries::eval(const Paravector& x) const {
  if (x.generators() != generators())
    throw DimensionMismatch("eval: point over wrong generator count");
  if (x.norm_squared() == 0.0) {
    if (has_principal())
      throw std::domain_error("Laurent evaluation at 0 with a principal part");
    return regular_.eval(x);
  }
  if (x.norm() < inner_ || x.norm() > outer_)
    std::cerr << "sclif: warning: evaluation at |x| = " << x.norm()
              << " outside the stored annulus (" << inner_ << ", " << outer_
              << ")\n";
  Multivector acc = regular_.eval(x);
  const double r = x.vec_norm();
  const std::vector<double> u = unit_direction(x, r);
  const std::complex<double> zinv = 1.0 / std::complex<double>(x.scalar(), r);
  std::complex<double> zp = zinv;
  for (const auto& b : principal_) {
    if (b.norm_squared() != 0.0) acc += embed_on_plane(zp, u) * b;
    zp *= zinv;
  }
  return acc;
}

PowerSeries s_derivative(const PowerSeries& f) {
  const std::size_t count = f.term_count();
  if (count <= 1) {
    PowerSeries out(f.generators());
    out.set_radius(f.radius());
    return out;
  }
  std::vector<Multivector> coeffs;
  coeffs.reserve(count - 1);
  for (std::size_t m = 1; m < count; ++m)
    coeffs.push_back(static_cast<double>(m) * f.coefficient(m));
  return PowerSeries(std::move(coeffs), f.radius());
}

PowerSeries multiply_real(const PowerSeries& f, const PowerSeries& g) {
  if (f.generators() != g.generators())
    throw DimensionMismatch("multiply_real: factors over different generator counts");
  check_real_coefficients(f, "multiply_real");
  const std::vector<double> fr = real_coefficients(f);
  const std::size_t lf = fr.size(), lg = g.term_count();
  if (lf == 0 || lg == 0) {
    PowerSeries out(f.generators());
    out.set_radius(std::min(f.radius(), g.radius()));
    return out;
  }
  std::vector<Multivector> out(lf + lg - 1, Multivector(f.generators()));
  for (std::size_t k = 0; k < lf; ++k) {
    if (fr[k] == 0.0) continue;
    for (std::size_t j = 0; j < lg; ++j) out[k + j] += fr[k] * g.coefficient(j);
  }
  return PowerSeries(std::move(out), std::min(f.radius(), g.radius()));
}

PowerSeries compose_real(const PowerSeries& f, const PowerSeries& g,
                         std::size_t order) {
  if (f.generators() != g.generators())
    throw DimensionMismatch("compose_real: series over different generator counts");
  check_real_coefficients(g, "compose_real");
  const int n = f.generators();
  const std::vector<double> gr = real_coefficients(g);

  std::vector<Multivector> res(order + 1, Multivector(n));
  std::vector<double> gp{1.0};  // g^0
  for (std::size_t m = 0; m < f.term_count(); ++m) {
    const Multivector& am = f.coefficient(m);
    if (am.norm_squared() != 0.0)
      for (std::size_t j = 0; j < gp.size(); ++j)
        if (gp[j] != 0.0) res[j] += gp[j] * am;
    if (m + 1 < f.term_count()) {
      // gp <- gp * g, truncated at the requested order
      std::vector<double> next(std::min(order + 1, gp.size() + gr.size() - 1), 0.0);
      for (std::size_t a = 0; a < gp.size(); ++a) {
        if (gp[a] == 0.0) continue;
        for (std::size_t b = 0; b < gr.size() && a + b < next.size(); ++b)
          next[a + b] += gp[a] * gr[b];
      }
      gp = std::move(next);
      if (gp.empty()) break;
    }
  }
  while (res.size() > 1 && res.back().norm_squared() == 0.0) res.pop_back();
  return PowerSeries(std::move(res), g.radius());
}

PowerSeries recenter(const PowerSeries& f, double y0) {
  const std::size_t count = f.term_count();
  if (count == 0) {
    PowerSeries out(f.generators());
    out.set_radius(f.radius());
    return out;
  }
  std::vector<Multivector> out(count, Multivector(f.generators()));
  for (std::size_t k = 0; k < count; ++k) {
    double binom = 1.0;   // C(m, k), updated over m
    double shift = 1.0;   // y0^{m-k}
    for (std::size_t m = k; m < count; ++m) {
      out[k] += (binom * shift) * f.coefficient(m);
      binom *= static_cast<double>(m + 1) / static_cast<double>(m + 1 - k);
      shift *= y0;
    }
  }
  const double r = f.radius();
  const double rr = std::isinf(r) ? r : std::max(0.0, r - std::abs(y0));
  return PowerSeries(std::move(out), rr);
}

LaurentSeries compose_inversion(const PowerSeries& f) {
  const int n = f.generators();
  Multivector a0 = f.term_count() > 0 ? f.coefficient(0) : Multivector(n);
  std::vector<Multivector> principal;
  for (std::size_t m = 1; m < f.term_count(); ++m) principal.push_back(f.coefficient(m));
  const double r = f.radius();
  double inner = 0.0;
  if (!std::isinf(r)) inner = r == 0.0 ? kInf : 1.0 / r;
  return LaurentSeries(PowerSeries({a0}, kInf), std::move(principal), inner, kInf);
}

PowerSeries extend_holomorphic(const std::vector<std::complex<double>>& coeffs,
                               const UnitOneVector& I) {
  const int n = I.generators();
  if (coeffs.empty()) return PowerSeries(n);
  std::vector<Multivector> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(from_plane(c, I).to_multivector());
  return PowerSeries(std::move(out));
}

double estimate_radius(const PowerSeries& f) {
  const std::size_t count = f.term_count();
  if (count <= 1) return kInf;
  double sup = 0.0;
  for (std::size_t m = std::max<std::size_t>(1, count / 2); m < count; ++m) {
    const double norm = f.coefficient(m).norm();
    if (norm > 0.0)
      sup = std::max(sup, std::pow(norm, 1.0 / static_cast<double>(m)));
  }
  return sup == 0.0 ? kInf : 1.0 / sup;
}

Multivector monogenicity_residual(const SliceEvaluator& f, const SlicePoint& p,
                                  double h) {
  if (h <= 0.0) throw std::invalid_argument("monogenicity_residual: step must be > 0");
  const auto at = [&](double dx, double dy) {
    return f(from_plane({p.x + dx, p.y + dy}, p.I));
  };
  const Multivector fx = (at(h, 0) - at(-h, 0)) * (0.5 / h);
  const Multivector fy = (at(0, h) - at(0, -h)) * (0.5 / h);
  return 0.5 * (fx + p.I.to_multivector() * fy);
}

SliceEvaluator evaluator(const PowerSeries& f) {
  return [f](const Paravector& x) { return f.eval(x); };
}

SliceEvaluator evaluator(const LaurentSeries& f) {
  return [f](const Paravector& x) { return f.eval(x); };
}

}  // namespace sclif
