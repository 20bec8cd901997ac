#pragma once

#include "hgspec/hypergraph.hpp"
#include "hgspec/matrix_ops.hpp"
#include "hgspec/numeric_types.hpp"
#include "hgspec/polynomial.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/structure.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hgspec {

// ---------------------------------------------------------------------------
// Eigenvalue descriptors

struct RationalValue {
  BigRational q;
};

/// (a + sign * sqrt(d)) / c with c > 0, d >= 0 and d not a perfect square.
struct SurdValue {
  BigInt a, d, c;
  int sign = 1;
};

/// The index-th real root (descending, counted with multiplicity) of a
/// monic integer polynomial.
struct PolyRootValue {
  Polynomial poly;
  std::size_t index = 0;
  std::shared_ptr<const std::vector<double>> roots;
};

/// shift + amplitude * cos((theta + 2 pi branch) / 3), branch in {0, 1, 2}.
struct TrigValue {
  double shift = 0.0, amplitude = 0.0, theta = 0.0;
  int branch = 0;
};

using DescriptorKind =
    std::variant<RationalValue, SurdValue, PolyRootValue, TrigValue>;

struct EigDescriptor {
  DescriptorKind kind;
  std::size_t multiplicity = 1;

  double value() const {
    return std::visit(
        [](const auto& v) -> double {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, RationalValue>) {
            return v.q.template convert_to<double>();
          } else if constexpr (std::is_same_v<T, SurdValue>) {
            const long double root =
                std::sqrt(v.d.template convert_to<long double>());
            return static_cast<double>(
                (v.a.template convert_to<long double>() + v.sign * root) /
                v.c.template convert_to<long double>());
          } else if constexpr (std::is_same_v<T, PolyRootValue>) {
            return v.roots->at(v.index);
          } else {
            return v.shift +
                   v.amplitude *
                       std::cos((v.theta + 2.0 * std::numbers::pi * v.branch) /
                                3.0);
          }
        },
        kind);
  }

  std::string kind_name() const {
    static constexpr const char* names[] = {"rational", "surd", "poly_root",
                                            "trig"};
    return names[kind.index()];
  }
};

inline std::vector<double> roots_with_multiplicity(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& r : real_roots(p))
    for (unsigned i = 0; i < r.multiplicity; ++i) out.push_back(r.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline EigDescriptor rational(BigRational q, std::size_t mult) {
  return {RationalValue{std::move(q)}, mult};
}

inline EigDescriptor rational(long long v, std::size_t mult) {
  return rational(BigRational(v), mult);
}

/// Normalises (a + sign sqrt(d)) / c: positive c, square factors shared with
/// a and c pulled out, perfect squares collapsed to rationals.
inline EigDescriptor surd(BigInt a, BigInt d, BigInt c, int sign,
                          std::size_t mult) {
  if (d < 0) throw ParameterError("surd: negative radicand");
  if (c == 0) throw ParameterError("surd: zero denominator");
  if (sign != 1 && sign != -1) throw ParameterError("surd: sign must be +-1");
  if (c < 0) {
    a = -a;
    c = -c;
    sign = -sign;
  }
  const BigInt s = boost::multiprecision::sqrt(d);
  if (s * s == d) return rational(BigRational(a + sign * s, c), mult);
  const BigInt g0 = gcd(abs(a), c);
  for (BigInt g = g0; g > 1; --g) {
    if (g0 % g == 0 && d % (g * g) == 0) {
      a /= g;
      c /= g;
      d /= g * g;
      break;
    }
  }
  return {SurdValue{std::move(a), std::move(d), std::move(c), sign}, mult};
}

inline std::pair<EigDescriptor, EigDescriptor> surd_pair(const BigInt& a,
                                                         const BigInt& d,
                                                         const BigInt& c,
                                                         std::size_t mult) {
  return {surd(a, d, c, 1, mult), surd(a, d, c, -1, mult)};
}

/// One descriptor per root of p (with multiplicity), sharing the solved
/// root list.
inline std::vector<EigDescriptor> poly_roots(Polynomial p, std::size_t mult) {
  if (p.degree() < 1) throw ParameterError("poly_roots: constant polynomial");
  if (p.leading() < 0) p = -p;
  if (p.leading() != 1) throw ParameterError("poly_roots: polynomial not monic");
  auto roots =
      std::make_shared<const std::vector<double>>(roots_with_multiplicity(p));
  std::vector<EigDescriptor> out;
  for (std::size_t i = 0; i < roots->size(); ++i)
    out.push_back({PolyRootValue{p, i, roots}, mult});
  return out;
}

/// Symbolic spectrum: descriptors with multiplicities summing to `order`.
class ClosedFormSpectrum {
 public:
  ClosedFormSpectrum() = default;
  ClosedFormSpectrum(std::vector<EigDescriptor> descriptors, std::size_t order)
      : order_(order) {
    std::size_t total = 0;
    for (auto& d : descriptors)
      if (d.multiplicity > 0) {
        total += d.multiplicity;
        d_.push_back(std::move(d));
      }
    if (total != order)
      throw std::logic_error("closed-form multiplicities sum to " +
                             std::to_string(total) + ", expected " +
                             std::to_string(order));
  }

  const std::vector<EigDescriptor>& descriptors() const noexcept { return d_; }
  std::size_t order() const noexcept { return order_; }

  /// Evaluated multiset, descending.
  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(order_);
    for (const auto& d : d_) out.insert(out.end(), d.multiplicity, d.value());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  double trace() const {
    double t = 0.0;
    for (const auto& d : d_) t += d.value() * static_cast<double>(d.multiplicity);
    return t;
  }

  double energy() const {
    double e = 0.0;
    for (const auto& d : d_)
      e += std::abs(d.value()) * static_cast<double>(d.multiplicity);
    return e;
  }

 private:
  std::vector<EigDescriptor> d_;
  std::size_t order_ = 0;
};

namespace detail {
inline void require_bounds(bool ok, const std::string& op,
                           const std::string& rule) {
  if (!ok) throw ParameterError(op + ": requires " + rule);
}
inline std::size_t count(long v) {
  if (v < 0) throw ParameterError("negative multiplicity");
  return static_cast<std::size_t>(v);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Hyperstar S_n^k

inline ClosedFormSpectrum hyperstar_adjacency(long n, long k) {
  detail::require_bounds(n >= 3 && k >= 2, "hyperstar_adjacency", "n >= 3, k >= 2");
  const BigInt b = k - 2, c0 = BigInt(n - 1) * (k - 1);
  auto [r1, r2] = surd_pair(b, b * b + 4 * c0, 2, 1);
  return ClosedFormSpectrum(
      {rational(-1, detail::count((n - 1) * (k - 2))),
       rational(k - 2, detail::count(n - 2)), r1, r2},
      static_cast<std::size_t>((n - 1) * (k - 1) + 1));
}

/// Coefficients (b, c0) of the main quadratic λ² - bλ - c0.
inline std::pair<BigInt, BigInt> hyperstar_seidel_quadratic(long n, long k) {
  return {BigInt(k - 1) * (n - 3) + 1, BigInt(n - 1) * (k - 1)};
}

inline ClosedFormSpectrum hyperstar_seidel(long n, long k) {
  detail::require_bounds(n >= 3 && k >= 2, "hyperstar_seidel", "n >= 3, k >= 2");
  const auto [b, c0] = hyperstar_seidel_quadratic(n, k);
  auto [r1, r2] = surd_pair(b, b * b + 4 * c0, 2, 1);
  return ClosedFormSpectrum(
      {rational(1, detail::count((n - 1) * (k - 2))),
       rational(3 - 2 * k, detail::count(n - 2)), r1, r2},
      static_cast<std::size_t>((n - 1) * (k - 1) + 1));
}

/// SE(S_n^k) = integer_part + sqrt(radicand).
struct HyperstarEnergy {
  BigInt integer_part;
  BigInt radicand;
  double value() const {
    return static_cast<double>(
        integer_part.convert_to<long double>() +
        std::sqrt(radicand.convert_to<long double>()));
  }
};

inline HyperstarEnergy hyperstar_seidel_energy_exact(long n, long k) {
  detail::require_bounds(n >= 3 && k >= 2, "hyperstar_seidel_energy",
                         "n >= 3, k >= 2");
  const BigInt km1 = k - 1, nm3 = n - 3;
  return {BigInt(n - 1) * (3 * k - 5) - (2 * k - 3),
          km1 * km1 * nm3 * nm3 + 2 * km1 * (3 * n - 5) + 1};
}

inline double hyperstar_seidel_energy(long n, long k) {
  return hyperstar_seidel_energy_exact(n, k).value();
}

/// The two main Seidel eigenvalues r1 >= r2 as (a ± sqrt d)/2.
inline std::pair<SurdValue, SurdValue> hyperstar_main_seidel(long n, long k) {
  detail::require_bounds(n >= 3 && k >= 2, "hyperstar_main_seidel",
                         "n >= 3, k >= 2");
  const auto [b, c0] = hyperstar_seidel_quadratic(n, k);
  const BigInt d = b * b + 4 * c0;
  return {SurdValue{b, d, 2, 1}, SurdValue{b, d, 2, -1}};
}

inline double surd_value(const SurdValue& s) {
  return EigDescriptor{s, 1}.value();
}

// ---------------------------------------------------------------------------
// (k, r)-regular hypergraphs and K_n^r

/// Maps a descending adjacency spectrum of a (k, r)-regular hypergraph to its
/// Seidel spectrum (descending in input order, not re-sorted).
inline std::vector<double> regular_seidel_from_adjacency(
    const std::vector<double>& adj_values, long n, long k, long r) {
  if (adj_values.empty())
    throw std::invalid_argument("regular_seidel_from_adjacency: empty input");
  if (!std::is_sorted(adj_values.begin(), adj_values.end(), std::greater<>()))
    throw std::invalid_argument(
        "regular_seidel_from_adjacency: values must be sorted descending");
  const double perron = static_cast<double>(r * (k - 1));
  if (std::abs(adj_values.front() - perron) > 1e-8)
    throw ParameterError("regular_seidel_from_adjacency: largest eigenvalue " +
                         std::to_string(adj_values.front()) + " != r(k-1) = " +
                         std::to_string(perron) + "; input is not regular");
  std::vector<double> out;
  out.push_back(static_cast<double>(n) - 1.0 - 2.0 * adj_values.front());
  for (std::size_t i = 1; i < adj_values.size(); ++i)
    out.push_back(-1.0 - 2.0 * adj_values[i]);
  return out;
}

/// Exact variant on rational and surd descriptors: one copy of the Perron
/// value r(k-1) maps to n-1-2λ, everything else to -1-2λ.
inline ClosedFormSpectrum regular_seidel_from_adjacency(
    const ClosedFormSpectrum& adj, long n, long k, long r) {
  const BigRational perron(BigInt(r) * (k - 1));
  std::vector<EigDescriptor> out;
  bool perron_seen = false;
  for (const auto& d : adj.descriptors()) {
    if (const auto* rv = std::get_if<RationalValue>(&d.kind)) {
      std::size_t mult = d.multiplicity;
      if (!perron_seen && rv->q == perron) {
        perron_seen = true;
        out.push_back(rational(BigRational(n - 1) - 2 * rv->q, 1));
        --mult;
      }
      out.push_back(rational(BigRational(-1) - 2 * rv->q, mult));
    } else if (const auto* sv = std::get_if<SurdValue>(&d.kind)) {
      // -1 - 2(a ± √d)/c = (-c - 2a ∓ √(4d)) / c
      out.push_back(surd(-sv->c - 2 * sv->a, 4 * sv->d, sv->c, -sv->sign,
                         d.multiplicity));
    } else {
      throw std::invalid_argument(
          "regular_seidel_from_adjacency: only rational and surd descriptors");
    }
  }
  if (!perron_seen)
    throw ParameterError(
        "regular_seidel_from_adjacency: r(k-1) is not an eigenvalue");
  return ClosedFormSpectrum(std::move(out), adj.order());
}

inline BigInt binomial(long n, long r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

inline ClosedFormSpectrum complete_uniform_adjacency(long n, long r) {
  detail::require_bounds(r >= 2 && r <= n, "complete_uniform_adjacency",
                         "2 <= r <= n");
  const BigInt c = binomial(n - 2, r - 2);
  return ClosedFormSpectrum({rational(BigRational(BigInt(n - 1) * c), 1),
                             rational(BigRational(-c), detail::count(n - 1))},
                            static_cast<std::size_t>(n));
}

inline ClosedFormSpectrum complete_uniform_seidel(long n, long r) {
  detail::require_bounds(r >= 2 && r <= n, "complete_uniform_seidel",
                         "2 <= r <= n");
  const BigInt c = binomial(n - 2, r - 2);
  return ClosedFormSpectrum(
      {rational(BigRational(BigInt(n - 1) * (1 - 2 * c)), 1),
       rational(BigRational(2 * c - 1), detail::count(n - 1))},
      static_cast<std::size_t>(n));
}

/// N_l = n (r(k-1))^l.
inline BigInt regular_walk_count(long n, long k, long r, unsigned l) {
  if (n < 0 || k < 1 || r < 0)
    throw ParameterError("regular_walk_count: requires n >= 0, k >= 1, r >= 0");
  return BigInt(n) * boost::multiprecision::pow(BigInt(r) * (k - 1), l);
}

// ---------------------------------------------------------------------------
// Uniform double hyperstar S_{n1,n2}^k

inline Polynomial double_hyperstar_quintic(long n1, long n2, long k) {
  const BigInt K = k, N1 = n1, N2 = n2;
  const BigInt K2 = K * K, K3 = K2 * K;
  return Polynomial::from_descending({
      1,
      -(3 * K - 7),
      17 + 3 * K2 + N2 + N1 - K * (14 + N2 + N1),
      -(-5 * (3 + N2 + N1) + K * (17 + 7 * N2 + 7 * N1) -
        K2 * (7 + 2 * N2 + 2 * N1) + K3),
      -(-1 + (K3 - 6 * K2 + 12 * K - 7) * N1 +
        (7 - 5 * K + K2 + (1 - K) * N1) * (K - 1) * N2),
      -(K - 1) * (-1 + N2 + N1 + (K2 - 4 * K + 3) * N2 * N1),
  });
}

inline std::size_t double_hyperstar_order(long n1, long n2, long k) {
  return static_cast<std::size_t>(n1 + n2 + (n1 + n2 - 1) * (k - 2));
}

inline void require_double_hyperstar(long n1, long n2, long k,
                                     const std::string& op) {
  detail::require_bounds(n1 >= 2 && n2 >= 2 && k >= 3, op,
                         "n1, n2 >= 2, k >= 3");
  detail::require_bounds(n1 + n2 >= 4, op, "n1 + n2 >= 4");
}

inline ClosedFormSpectrum double_hyperstar_adjacency(long n1, long n2, long k) {
  require_double_hyperstar(n1, n2, k, "double_hyperstar_adjacency");
  std::vector<EigDescriptor> d{
      rational(-1, detail::count((k - 2) * (n1 + n2 - 1) - 1)),
      rational(k - 2, detail::count(n1 + n2 - 4))};
  for (auto& e : poly_roots(double_hyperstar_quintic(n1, n2, k), 1))
    d.push_back(std::move(e));
  return ClosedFormSpectrum(std::move(d), double_hyperstar_order(n1, n2, k));
}

/// Quotient of S(S_{n1,n2}^k) on the canonical 5-block partition, computed
/// from the generated hypergraph.
inline QuotientResult double_hyperstar_quotient(long n1, long n2, long k) {
  require_double_hyperstar(n1, n2, k, "double_hyperstar_quotient");
  const auto h = gen_double_hyperstar(n1, n2, k);
  return quotient_matrix(seidel_matrix(h),
                         double_hyperstar_partition(n1, n2, k));
}

/// Closed-form 5x5 quotient of S(S_{n1,n2}^k) on the canonical partition.
inline Matrix<std::int64_t> double_hyperstar_printed_quotient(long n1, long n2,
                                                              long k) {
  const std::int64_t a = (n1 - 1) * (k - 1), b = (n2 - 1) * (k - 1);
  Matrix<std::int64_t> q(5, 5);
  const std::int64_t rows[5][5] = {
      {0, -a, -1, b, 2 - k},
      {-1, (n1 - 3) * (k - 1) + 1, 1, b, k - 2},
      {-1, a, 0, -b, 2 - k},
      {1, a, -1, (n2 - 3) * (k - 1) + 1, k - 2},
      {-1, a, -1, b, 3 - k},
  };
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) q(i, j) = rows[i][j];
  return q;
}

inline ClosedFormSpectrum double_hyperstar_seidel(long n1, long n2, long k) {
  require_double_hyperstar(n1, n2, k, "double_hyperstar_seidel");
  const auto qr = double_hyperstar_quotient(n1, n2, k);
  if (!qr.equitable)
    throw std::logic_error(
        "double_hyperstar_seidel: canonical partition is not equitable");
  std::vector<EigDescriptor> d{
      rational(1, detail::count((k - 2) * (n1 + n2 - 1) - 1)),
      rational(3 - 2 * k, detail::count(n1 + n2 - 4))};
  for (auto& e : poly_roots(characteristic_polynomial(qr.integer_q), 1))
    d.push_back(std::move(e));
  return ClosedFormSpectrum(std::move(d), double_hyperstar_order(n1, n2, k));
}

// ---------------------------------------------------------------------------
// Sunflower S^k

struct FactoredPolynomial {
  struct Factor {
    Polynomial base;
    unsigned exponent = 1;
  };
  std::vector<Factor> factors;

  Polynomial expand() const {
    Polynomial out{1};
    for (const auto& f : factors) out = out * f.base.pow(f.exponent);
    return out;
  }

  double eval(double x) const {
    long double acc = 1.0L;
    for (const auto& f : factors)
      acc *= std::pow(f.base.eval_ld(x), static_cast<long double>(f.exponent));
    return static_cast<double>(acc);
  }
};

inline Polynomial sunflower_adjacency_cubic(long k) {
  return Polynomial{2 - 3 * k + k * k, 6 - 6 * k + k * k, 4 - 2 * k, 1};
}

/// det(λI - A(S^k)) = (λ+1)^{(k-1)(k-2)} · cubic · (λ² - (k-3)λ - (2k-3))^{k-2}.
/// Factors with exponent 0 are omitted.
inline FactoredPolynomial sunflower_char_poly(long k) {
  detail::require_bounds(k >= 2, "sunflower_char_poly", "k >= 2");
  FactoredPolynomial p;
  const auto e1 = static_cast<unsigned>((k - 1) * (k - 2));
  const auto e3 = static_cast<unsigned>(k - 2);
  if (e1 > 0) p.factors.push_back({Polynomial{1, 1}, e1});
  p.factors.push_back({sunflower_adjacency_cubic(k), 1});
  if (e3 > 0) p.factors.push_back({Polynomial{-(2 * k - 3), -(k - 3), 1}, e3});
  return p;
}

/// The three roots of the adjacency cubic in trigonometric form, branch
/// i = 0, 1, 2. Throws if the arccos argument leaves [-1, 1] by more than
/// 1e-12.
inline std::vector<TrigValue> sunflower_trig_roots(long k) {
  detail::require_bounds(k >= 2, "sunflower_trig_roots", "k >= 2");
  const double kk = static_cast<double>(k);
  const double p = kk * kk + 2.0 * kk - 2.0;
  double arg = (34.0 - 51.0 * kk + 21.0 * kk * kk - 2.0 * kk * kk * kk) /
               (2.0 * std::sqrt(p * p * p));
  if (std::abs(arg) > 1.0 + 1e-12)
    throw std::logic_error("sunflower_trig_roots: arccos argument " +
                           std::to_string(arg) + " outside [-1, 1]");
  arg = std::clamp(arg, -1.0, 1.0);
  const double theta = std::acos(arg);
  std::vector<TrigValue> out;
  for (int i = 0; i < 3; ++i)
    out.push_back({2.0 * (kk - 2.0) / 3.0, 2.0 * std::sqrt(p) / 3.0, theta, i});
  return out;
}

inline ClosedFormSpectrum sunflower_adjacency(long k) {
  detail::require_bounds(k >= 2, "sunflower_adjacency", "k >= 2");
  const auto m = detail::count(k - 2);
  auto [q1, q2] = surd_pair(k - 3, BigInt(k + 3) * (k - 1), 2, m);
  std::vector<EigDescriptor> d{rational(-1, detail::count((k - 1) * (k - 2))),
                               q1, q2};
  for (const auto& t : sunflower_trig_roots(k)) d.push_back({t, 1});
  return ClosedFormSpectrum(std::move(d),
                            static_cast<std::size_t>(k * (k - 1) + 1));
}

inline Polynomial sunflower_seidel_cubic(long k) {
  const BigInt K = k, K2 = K * K, K3 = K2 * K;
  return Polynomial::from_descending({1, -(6 - 5 * K + K2),
                                      -(-17 + 26 * K - 12 * K2 + 2 * K3),
                                      -8 + 17 * K - 11 * K2 + 2 * K3});
}

/// Closed-form 3x3 quotient of S(S^k) on the canonical partition.
inline Matrix<std::int64_t> sunflower_printed_quotient(long k) {
  Matrix<std::int64_t> q(3, 3);
  const std::int64_t rows[3][3] = {{0, 1 - k, (k - 1) * (k - 1)},
                                   {-1, 2 - k, (k - 1) * (k - 3)},
                                   {1, k - 3, (k - 2) * (k - 2)}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q(i, j) = rows[i][j];
  return q;
}

inline ClosedFormSpectrum sunflower_seidel(long k) {
  detail::require_bounds(k >= 2, "sunflower_seidel", "k >= 2");
  const auto m = detail::count(k - 2);
  auto [q1, q2] = surd_pair(2 - k, BigInt(k + 3) * (k - 1), 1, m);
  std::vector<EigDescriptor> d{rational(1, detail::count((k - 1) * (k - 2))),
                               q1, q2};
  for (auto& e : poly_roots(sunflower_seidel_cubic(k), 1))
    d.push_back(std::move(e));
  return ClosedFormSpectrum(std::move(d),
                            static_cast<std::size_t>(k * (k - 1) + 1));
}

// ---------------------------------------------------------------------------
// Family dispatch

/// Closed-form spectrum for a family-tagged hypergraph, or nullopt when the
/// family has no closed form or the tag's parameters are out of bounds.
inline std::optional<ClosedFormSpectrum> closed_form_for(
    const FamilyTag& f, bool seidel) {
  const auto& p = f.params;
  try {
    if (f.name == "hyperstar" && p.size() == 2)
      return seidel ? hyperstar_seidel(p[0], p[1])
                    : hyperstar_adjacency(p[0], p[1]);
    if (f.name == "double-hyperstar" && p.size() == 3)
      return seidel ? double_hyperstar_seidel(p[0], p[1], p[2])
                    : double_hyperstar_adjacency(p[0], p[1], p[2]);
    if (f.name == "sunflower" && p.size() == 1)
      return seidel ? sunflower_seidel(p[0]) : sunflower_adjacency(p[0]);
    if (f.name == "complete" && p.size() == 2)
      return seidel ? complete_uniform_seidel(p[0], p[1])
                    : complete_uniform_adjacency(p[0], p[1]);
  } catch (const ParameterError&) {
  }
  return std::nullopt;
}

}  // namespace hgspec
