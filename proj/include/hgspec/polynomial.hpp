#pragma once

#include "hgspec/numeric_types.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace hgspec {

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending order (coeffs[i] multiplies x^i). Trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending)
      : c_(std::move(ascending)) {
    trim();
  }
  Polynomial(std::initializer_list<long long> ascending) {
    for (auto v : ascending) c_.emplace_back(v);
    trim();
  }

  /// Builds from coefficients listed highest degree first.
  static Polynomial from_descending(std::vector<BigInt> descending) {
    std::reverse(descending.begin(), descending.end());
    return Polynomial(std::move(descending));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : BigInt(0);
  }
  const BigInt& leading() const { return c_.back(); }

  double eval(double x) const { return static_cast<double>(eval_ld(x)); }

  long double eval_ld(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + it->convert_to<long double>();
    return acc;
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * i);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<BigInt> out = a.c_;
    for (auto& x : out) x = -x;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  Polynomial pow(unsigned e) const {
    Polynomial result{1};
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  bool operator==(const Polynomial&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      const BigInt& c = p.c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      const BigInt mag = abs(c);
      if (mag != 1 || i == 0) os << mag;
      if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

namespace detail {

using RatPoly = std::vector<BigRational>;  // ascending

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly to_rat(const Polynomial& p) {
  RatPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

inline RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * i);
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
inline std::pair<RatPoly, RatPoly> rat_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1, BigRational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline RatPoly monic(RatPoly p) {
  trim(p);
  if (p.empty()) return p;
  const BigRational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rat_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline RatPoly rat_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Primitive integer polynomial with positive leading coefficient.
inline Polynomial to_primitive(const RatPoly& p) {
  BigInt den = 1;
  for (const auto& c : p) {
    const BigInt d = boost::multiprecision::denominator(c);
    den = den / gcd(den, d) * d;
  }
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = boost::multiprecision::numerator(c) *
               (den / boost::multiprecision::denominator(c));
    content = gcd(content, abs(v));
    ints.push_back(std::move(v));
  }
  if (content > 1)
    for (auto& v : ints) v /= content;
  if (!ints.empty() && ints.back() < 0)
    for (auto& v : ints) v = -v;
  return Polynomial(std::move(ints));
}

}  // namespace detail

struct PolynomialFactor {
  Polynomial factor;  // primitive, square-free, positive leading coefficient
  unsigned multiplicity = 1;
};

/// Yun's square-free decomposition over Q: p = c * prod factor_i^i.
inline std::vector<PolynomialFactor> square_free_decomposition(
    const Polynomial& p) {
  if (p.degree() < 1) return {};
  using namespace detail;
  const RatPoly f = to_rat(p);
  const RatPoly fp = rat_derivative(f);
  RatPoly a = rat_gcd(f, fp);
  RatPoly b = rat_divmod(f, a).first;
  RatPoly c = rat_divmod(fp, a).first;
  RatPoly d = rat_sub(c, rat_derivative(b));
  std::vector<PolynomialFactor> out;
  for (unsigned i = 1; b.size() > 1; ++i) {
    a = rat_gcd(b, d);
    if (a.size() > 1) out.push_back({to_primitive(a), i});
    b = rat_divmod(b, a).first;
    c = rat_divmod(d, a).first;
    d = rat_sub(c, rat_derivative(b));
  }
  return out;
}

class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolynomialRoot {
  double value = 0.0;
  unsigned multiplicity = 1;
};

/// Real roots of a square-free integer polynomial: companion-matrix
/// eigenvalues followed by Newton refinement on the exact coefficients.
/// Throws if a root is not real (imaginary part above 1e-6 relative).
inline std::vector<double> real_roots_square_free(const Polynomial& p) {
  const int deg = p.degree();
  if (deg < 1) return {};
  const long double lead = p.leading().convert_to<long double>();
  if (deg == 1)
    return {static_cast<double>(-p.coefficient(0).convert_to<long double>() /
                                lead)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    companion(i, deg - 1) = static_cast<double>(
        -p.coefficient(static_cast<std::size_t>(i)).convert_to<long double>() /
        lead);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw RootFindingError("companion eigenvalue solver failed");
  std::vector<double> roots;
  for (int i = 0; i < deg; ++i) {
    const auto z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real())))
      throw RootFindingError("polynomial has a non-real root");
    roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());

  const Polynomial dp = p.derivative();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double gap = INFINITY;
    if (i > 0) gap = std::min(gap, roots[i - 1] - roots[i]);
    if (i + 1 < roots.size()) gap = std::min(gap, roots[i] - roots[i + 1]);
    long double x = roots[i];
    for (int it = 0; it < 60; ++it) {
      const long double fx = p.eval_ld(x), dfx = dp.eval_ld(x);
      if (dfx == 0) break;
      const long double step = fx / dfx;
      x -= step;
      if (std::abs(step) <= 1e-18L * (1 + std::abs(x))) break;
    }
    // Keep the refinement only if it stayed near its starting root.
    if (std::abs(static_cast<double>(x) - roots[i]) < 0.25 * gap ||
        !std::isfinite(gap))
      roots[i] = static_cast<double>(x);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

/// Distinct real roots with multiplicities, descending.
inline std::vector<PolynomialRoot> real_roots(const Polynomial& p) {
  std::vector<PolynomialRoot> out;
  for (const auto& f : square_free_decomposition(p))
    for (double r : real_roots_square_free(f.factor))
      out.push_back({r, f.multiplicity});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.value > b.value; });
  return out;
}

/// Exact det(xI - M) for an integer matrix (Faddeev-LeVerrier; the
/// divisions are exact over Z).
template <class Int>
Polynomial characteristic_polynomial(const Matrix<Int>& m) {
  if (!m.square())
    throw std::invalid_argument("characteristic_polynomial: not square");
  const std::size_t n = m.rows();
  BigIntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = BigInt(m(i, j));
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  BigIntMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    BigIntMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const BigIntMatrix amk = a * mk;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / BigInt(k);
  }
  return Polynomial(std::move(c));
}

}  // namespace hgspec
