#include "sclif/multivector.hpp"

#include <cmath>
#include <sstream>

namespace sclif {

namespace {

void check_generator_count(int n) {
  if (n < 1 || n > kMaxGenerators) {
    throw std::invalid_argument("generator count must be in [1, " +
                                std::to_string(kMaxGenerators) + "], got " +
                                std::to_string(n));
  }
}

void check_same_algebra(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": operands over " +
                            std::to_string(a) + " and " + std::to_string(b) +
                            " generators");
  }
}

}  // namespace

double blade_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  swaps += std::popcount(a & b);  // e_i e_i = -1 per shared generator
  return (swaps & 1) ? -1.0 : 1.0;
}

std::string blade_key(Mask a) {
  std::vector<int> idx;
  for (int i = 0; i < kMaxGenerators; ++i)
    if (a & (Mask{1} << i)) idx.push_back(i + 1);
  std::string out;
  const bool wide = !idx.empty() && idx.back() > 9;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(idx[k]);
  }
  // A lone index above 9 keeps a trailing comma so that "12," (the blade
  // e_12) can never be mistaken for "12" (the blade e_1 e_2).
  if (wide && idx.size() == 1) out += ',';
  return out;
}

Mask parse_blade_key(const std::string& key, int n) {
  check_generator_count(n);
  std::vector<int> idx;
  if (key.find(',') != std::string::npos) {
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("blade key '" + key + "': bad index '" + tok + "'");
      idx.push_back(std::stoi(tok));
    }
  } else {
    for (char c : key) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("blade key '" + key + "': unexpected character '" +
                                    std::string(1, c) + "'");
      idx.push_back(c - '0');
    }
  }
  Mask mask = 0;
  int prev = 0;
  for (int i : idx) {
    if (i < 1 || i > n)
      throw std::invalid_argument("blade key '" + key + "': generator index " +
                                  std::to_string(i) + " out of [1, " +
                                  std::to_string(n) + "]");
    if (i <= prev)
      throw std::invalid_argument("blade key '" + key +
                                  "': generator indices must be strictly ascending");
    prev = i;
    mask |= Mask{1} << (i - 1);
  }
  return mask;
}

Multivector::Multivector(int n) : n_(n) {
  check_generator_count(n);
  coeffs_.assign(std::size_t{1} << n, 0.0);
}

Multivector Multivector::scalar(int n, double value) {
  Multivector v(n);
  v.coeffs_[0] = value;
  return v;
}

Multivector Multivector::blade(int n, Mask mask, double value) {
  Multivector v(n);
  if (mask >= v.size())
    throw std::invalid_argument("blade mask " + std::to_string(mask) +
                                " out of range for n = " + std::to_string(n));
  v.coeffs_[mask] = value;
  return v;
}

double Multivector::norm_squared() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return s;
}

double Multivector::norm() const { return std::sqrt(norm_squared()); }

Multivector Multivector::grade(int k) const {
  if (k < 0 || k > n_)
    throw std::invalid_argument("grade " + std::to_string(k) + " out of [0, " +
                                std::to_string(n_) + "]");
  Multivector out(n_);
  for (Mask m = 0; m < coeffs_.size(); ++m)
    if (blade_grade(m) == k) out.coeffs_[m] = coeffs_[m];
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_algebra(n_, rhs.n_, "sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_algebra(n_, rhs.n_, "difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(*this);
  for (double& c : out.coeffs_) c = -c;
  return out;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  check_same_algebra(a.generators(), b.generators(), "geometric product");
  Multivector out(a.generators());
  const Mask size = static_cast<Mask>(a.size());
  for (Mask i = 0; i < size; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (Mask j = 0; j < size; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      out[i ^ j] += blade_sign(i, j) * (ai * bj);
    }
  }
  return out;
}

Multivector grade_project(const Multivector& a, int k) { return a.grade(k); }

InnerWedge inner_wedge(const Multivector& a, const Multivector& b) {
  for (const Multivector* v : {&a, &b}) {
    const double tol = 1e-13 * std::max(1.0, v->norm());
    for (Mask m = 0; m < v->size(); ++m)
      if (blade_grade(m) != 1 && std::abs((*v)[m]) > tol)
        throw std::invalid_argument("inner_wedge expects 1-vectors, found blade e" +
                                    blade_key(m));
  }
  const Multivector p = a * b;  // grade 0 plus grade 2 only for 1-vectors
  return InnerWedge{p.scalar_part(), p.grade(2)};
}

Paravector::Paravector(double x0, std::vector<double> vec)
    : x0_(x0), vec_(std::move(vec)) {
  check_generator_count(static_cast<int>(vec_.size()));
}

Paravector Paravector::zero(int n) { return Paravector(0.0, std::vector<double>(n, 0.0)); }

Paravector Paravector::real(int n, double x0) {
  return Paravector(x0, std::vector<double>(n, 0.0));
}

double Paravector::vec_norm() const {
  double s = 0.0;
  for (double c : vec_) s += c * c;
  return std::sqrt(s);
}

double Paravector::norm_squared() const {
  double s = x0_ * x0_;
  for (double c : vec_) s += c * c;
  return s;
}

double Paravector::norm() const { return std::sqrt(norm_squared()); }

Multivector Paravector::to_multivector() const {
  Multivector out(generators());
  out[0] = x0_;
  for (std::size_t i = 0; i < vec_.size(); ++i) out[Mask{1} << i] = vec_[i];
  return out;
}

Paravector Paravector::conjugate() const {
  Paravector out(*this);
  for (double& c : out.vec_) c = -c;
  return out;
}

Paravector Paravector::inverse() const {
  const double n2 = norm_squared();
  if (n2 == 0.0) throw std::domain_error("paravector inverse: division by zero");
  Paravector out = conjugate();
  out.x0_ /= n2;
  for (double& c : out.vec_) c /= n2;
  return out;
}

Paravector& Paravector::operator+=(const Paravector& rhs) {
  check_same_algebra(generators(), rhs.generators(), "paravector sum");
  x0_ += rhs.x0_;
  for (std::size_t i = 0; i < vec_.size(); ++i) vec_[i] += rhs.vec_[i];
  return *this;
}

Paravector& Paravector::operator-=(const Paravector& rhs) {
  check_same_algebra(generators(), rhs.generators(), "paravector difference");
  x0_ -= rhs.x0_;
  for (std::size_t i = 0; i < vec_.size(); ++i) vec_[i] -= rhs.vec_[i];
  return *this;
}

Paravector& Paravector::operator*=(double s) {
  x0_ *= s;
  for (double& c : vec_) c *= s;
  return *this;
}

Paravector Paravector::operator-() const {
  Paravector out(*this);
  out.x0_ = -out.x0_;
  for (double& c : out.vec_) c = -c;
  return out;
}

Paravector operator+(Paravector a, const Paravector& b) { return a += b; }
Paravector operator-(Paravector a, const Paravector& b) { return a -= b; }
Paravector operator*(Paravector a, double s) { return a *= s; }
Paravector operator*(double s, Paravector a) { return a *= s; }

Paravector power(const Paravector& x, int m) {
  const int n = x.generators();
  if (m == 0) return Paravector::real(n, 1.0);
  const Paravector base = m > 0 ? x : x.inverse();
  const int k = m > 0 ? m : -m;
  const Multivector base_mv = base.to_multivector();
  Multivector acc = base_mv;
  for (int i = 1; i < k; ++i) acc = acc * base_mv;
  return paravector_part(acc);
}

Paravector paravector_part(const Multivector& v) {
  const int n = v.generators();
  std::vector<double> vec(n);
  for (int i = 0; i < n; ++i) vec[i] = v[Mask{1} << i];
  return Paravector(v.scalar_part(), std::move(vec));
}

std::string to_string(const Multivector& v) {
  std::ostringstream out;
  bool first = true;
  for (Mask m = 0; m < v.size(); ++m) {
    const double c = v[m];
    if (c == 0.0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const double mag = std::abs(c);
    if (m == 0 || mag != 1.0) {
      out << mag;
      if (m != 0) out << " ";
    }
    if (m != 0) out << "e" << blade_key(m);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace sclif
