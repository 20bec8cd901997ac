#pragma once

#include "hgspec/hypergraph.hpp"
#include "hgspec/matrix_ops.hpp"
#include "hgspec/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hgspec {

/// Disjoint nonempty blocks covering 0..n-1.
class Partition {
 public:
  Partition() = default;
  Partition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
      : blocks_(std::move(blocks)), block_of_(n, kUnassigned) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].empty())
        throw StructuralError("partition block " + std::to_string(b) +
                              " is empty");
      for (Vertex v : blocks_[b]) {
        if (v >= n)
          throw StructuralError("partition vertex " + std::to_string(v) +
                                " out of range");
        if (block_of_[v] != kUnassigned)
          throw StructuralError("vertex " + std::to_string(v) +
                                " appears in two blocks");
        block_of_[v] = b;
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (block_of_[v] == kUnassigned)
        throw StructuralError("vertex " + std::to_string(v) +
                              " is not covered by the partition");
  }

  static Partition singletons(std::size_t n) {
    std::vector<std::vector<Vertex>> b;
    for (Vertex v = 0; v < n; ++v) b.push_back({v});
    return Partition(n, std::move(b));
  }

  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t order() const noexcept { return block_of_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t block_of(Vertex v) const { return block_of_.at(v); }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Vertices grouped by identical edge-membership sets; blocks ordered by
/// their smallest vertex.
inline Partition twin_classes(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> membership(h.order());
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (Vertex v : h.edges()[e]) membership[v].push_back(e);
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < h.order(); ++v) {
    auto [it, inserted] = index.try_emplace(membership[v], blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(v);
  }
  return Partition(h.order(), std::move(blocks));
}

struct QuotientWitness {
  std::size_t block_i = 0, block_j = 0;
  Vertex row_a = 0, row_b = 0;
  std::int64_t sum_a = 0, sum_b = 0;
};

/// q_ij is the common row sum of block M_ij when the partition is
/// equitable, else the average row sum. `integer_q` is exact and only
/// meaningful when equitable.
struct QuotientResult {
  RealMatrix q;
  Matrix<std::int64_t> integer_q;
  std::vector<std::size_t> block_sizes;
  bool equitable = false;
  std::optional<QuotientWitness> witness;
};

inline QuotientResult quotient_matrix(const IntSymMatrix& m,
                                      const Partition& p) {
  if (p.order() != m.size())
    throw StructuralError("quotient_matrix: partition order " +
                          std::to_string(p.order()) + " != matrix size " +
                          std::to_string(m.size()));
  const std::size_t b = p.size();
  QuotientResult out;
  out.q = RealMatrix(b, b);
  out.integer_q = Matrix<std::int64_t>(b, b);
  out.equitable = true;
  for (const auto& blk : p.blocks()) out.block_sizes.push_back(blk.size());
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      std::int64_t total = 0;
      std::optional<std::int64_t> first;
      for (Vertex r : p.blocks()[i]) {
        std::int64_t s = 0;
        for (Vertex c : p.blocks()[j]) s += m(r, c);
        total += s;
        if (!first) {
          first = s;
        } else if (s != *first && !out.witness) {
          out.equitable = false;
          out.witness = QuotientWitness{i, j, p.blocks()[i].front(), r,
                                        *first, s};
        }
      }
      out.integer_q(i, j) = *first;
      out.q(i, j) = static_cast<double>(total) /
                    static_cast<double>(p.blocks()[i].size());
    }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical partitions of the generated families (generator layouts in
// hypergraph.hpp).

namespace detail {
inline std::vector<Vertex> vertex_range(Vertex begin, Vertex end) {
  std::vector<Vertex> r;
  for (Vertex v = begin; v < end; ++v) r.push_back(v);
  return r;
}
}  // namespace detail

/// {center | all other vertices}.
inline Partition hyperstar_partition(long n, long k) {
  const auto order = static_cast<Vertex>((n - 1) * (k - 1) + 1);
  return Partition(order, {{0}, detail::vertex_range(1, order)});
}

/// {v_{0,0} | petal anchors | outer petal vertices}.
inline Partition sunflower_partition(long k) {
  const auto order = static_cast<Vertex>(k * (k - 1) + 1);
  const auto kk = static_cast<Vertex>(k);
  return Partition(order, {{0}, detail::vertex_range(1, kk),
                           detail::vertex_range(kk, order)});
}

/// {center1 | star-1 pendants | center2 | star-2 pendants | bridge fill}.
inline Partition double_hyperstar_partition(long n1, long n2, long k) {
  const auto p1 = static_cast<Vertex>((n1 - 1) * (k - 1));
  const auto p2 = static_cast<Vertex>((n2 - 1) * (k - 1));
  const Vertex c2 = 1 + p1;
  const Vertex fill = c2 + 1 + p2;
  const Vertex order = fill + static_cast<Vertex>(k - 2);
  return Partition(order, {{0}, detail::vertex_range(1, c2), {c2},
                           detail::vertex_range(c2 + 1, fill),
                           detail::vertex_range(fill, order)});
}

/// Canonical equitable partition for a family-tagged hypergraph, if any.
inline std::optional<Partition> canonical_partition(const Hypergraph& h) {
  const auto& f = h.family();
  if (!f) return std::nullopt;
  const auto& p = f->params;
  if (f->name == "hyperstar" && p.size() == 2)
    return hyperstar_partition(p[0], p[1]);
  if (f->name == "sunflower" && p.size() == 1) return sunflower_partition(p[0]);
  if (f->name == "double-hyperstar" && p.size() == 3)
    return double_hyperstar_partition(p[0], p[1], p[2]);
  if (f->name == "complete") {
    std::vector<Vertex> all = detail::vertex_range(0, h.order());
    return Partition(h.order(), {all});
  }
  return std::nullopt;
}

/// Eigenvalues of an equitable quotient via the symmetric similarity
/// D^{1/2} Q D^{-1/2}, D = diag(block sizes). Descending.
inline std::vector<double> quotient_eigenvalues(const QuotientResult& qr) {
  if (!qr.equitable)
    throw std::invalid_argument(
        "quotient_eigenvalues: partition is not equitable");
  const std::size_t b = qr.q.rows();
  RealMatrix sym(b, b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const double v = static_cast<double>(qr.integer_q(i, j)) *
                       std::sqrt(static_cast<double>(qr.block_sizes[i]) /
                                 static_cast<double>(qr.block_sizes[j]));
      sym(i, j) = v;
    }
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j)
      sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
  return eigen_symmetric(sym).values;
}

namespace detail {
// Greedy multiset containment of sorted lists: each needle takes the
// closest unused haystack value within tol.
inline bool contained(std::vector<double> needles,
                      const std::vector<double>& haystack, double tol) {
  std::vector<bool> used(haystack.size(), false);
  std::sort(needles.begin(), needles.end(), std::greater<>());
  for (double x : needles) {
    std::size_t best = haystack.size();
    double best_gap = tol;
    for (std::size_t i = 0; i < haystack.size(); ++i) {
      const double gap = std::abs(haystack[i] - x);
      if (!used[i] && gap <= best_gap) {
        best = i;
        best_gap = gap;
      }
    }
    if (best == haystack.size()) return false;
    used[best] = true;
  }
  return true;
}
}  // namespace detail

/// True iff every eigenvalue of q (a general real matrix) matches a distinct
/// eigenvalue of m within tol. A non-real eigenvalue of q never matches.
inline bool spectrum_containment(const RealMatrix& q,
                                 const std::vector<double>& m_values,
                                 double tol) {
  const auto b = static_cast<Eigen::Index>(q.rows());
  Eigen::MatrixXd e(b, b);
  for (Eigen::Index i = 0; i < b; ++i)
    for (Eigen::Index j = 0; j < b; ++j)
      e(i, j) = q(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(e, false);
  if (solver.info() != Eigen::Success) return false;
  std::vector<double> needles;
  for (Eigen::Index i = 0; i < b; ++i) {
    const auto z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) > tol) return false;
    needles.push_back(z.real());
  }
  return detail::contained(needles, m_values, tol);
}

inline bool spectrum_containment(const RealMatrix& q, const IntSymMatrix& m,
                                 double tol) {
  return spectrum_containment(q, eigenvalues(m), tol);
}

inline bool spectrum_containment(const QuotientResult& qr,
                                 const std::vector<double>& m_values,
                                 double tol) {
  return detail::contained(quotient_eigenvalues(qr), m_values, tol);
}

// ---------------------------------------------------------------------------
// Verifiers

/// Reproducible sample points in [lo, hi) from a 64-bit Mersenne Twister;
/// the mapping from raw bits is fixed so results do not depend on the
/// standard library's distribution implementation.
inline std::vector<double> sample_points(std::uint64_t seed, std::size_t count,
                                         double lo, double hi) {
  std::mt19937_64 gen(seed);
  std::vector<double> pts;
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    pts.push_back(lo + (hi - lo) * u);
  }
  return pts;
}

struct IdentityPoint {
  double lambda = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_error = 0.0;
};

struct IdentityReport {
  std::string check;
  double max_rel_error = 0.0;
  std::vector<IdentityPoint> points;  // points actually used
  std::vector<double> skipped;        // points excluded near poles
  std::size_t points_used() const { return points.size(); }
};

inline constexpr double kPoleExclusion = 1e-8;

namespace detail {
// Upper bound on |det(λI - M)| from the spectral radius of M; used as the
// absolute floor of the relative error so that evaluations at a zero of both
// sides are judged against the natural magnitude of the polynomial.
inline double char_poly_bound(double lambda, const std::vector<double>& values) {
  double radius = 0.0;
  for (double v : values) radius = std::max(radius, std::abs(v));
  double b = 1.0;
  for (std::size_t i = 0; i < values.size(); ++i) b *= std::abs(lambda) + radius;
  return b;
}

inline double relative_gap(double lhs, double rhs, double bound) {
  const double denom =
      std::max({std::abs(lhs), std::abs(rhs), 1e-12 * bound, 1e-300});
  return std::abs(lhs - rhs) / denom;
}
}  // namespace detail

/// Pointwise check of
///   P_S(λ) = (-2)^n P_A(-(λ+1)/2) (1 - H(-2/(λ+1)) / (λ+1)),
/// with H reconstructed from the adjacency eigendecomposition.
inline IdentityReport verify_char_poly_identity(
    const Hypergraph& h, const std::vector<double>& lambdas) {
  const auto a = adjacency_matrix(h);
  const auto s = seidel_matrix(h);
  const auto da = eigen_symmetric(a);
  const auto walk = walk_gen_from_spectrum(da);
  const auto s_values = eigenvalues(s);
  const double sign_pow = std::pow(-2.0, static_cast<double>(h.order()));
  IdentityReport report;
  report.check = "identity";
  for (double lambda : lambdas) {
    bool near_pole = std::abs(lambda + 1.0) < kPoleExclusion;
    for (std::size_t j = 0; j < da.values.size() && !near_pole; ++j)
      if (walk.coefficients[j] > WalkGenEval::kNegligibleWeight &&
          std::abs(lambda - (-1.0 - 2.0 * da.values[j])) < kPoleExclusion)
        near_pole = true;
    if (near_pole) {
      report.skipped.push_back(lambda);
      continue;
    }
    IdentityPoint pt;
    pt.lambda = lambda;
    pt.lhs = char_poly_eval(s, lambda);
    const double t = -2.0 / (lambda + 1.0);
    pt.rhs = sign_pow * char_poly_eval(a, -(lambda + 1.0) / 2.0) *
             (-1.0 / (lambda + 1.0) * walk(t) + 1.0);
    pt.rel_error =
        detail::relative_gap(pt.lhs, pt.rhs,
                             detail::char_poly_bound(lambda, s_values));
    report.max_rel_error = std::max(report.max_rel_error, pt.rel_error);
    report.points.push_back(pt);
  }
  return report;
}

/// Regular-case identity
///   P_S(λ) = (-2)^n (λ+1+2r(k-1)-n)/(λ+1+2r(k-1)) P_A((-λ-1)/2).
/// Throws if h is not (k, r)-regular of order n.
inline IdentityReport verify_regular_identity(
    const Hypergraph& h, std::size_t n, std::size_t k, std::size_t r,
    const std::vector<double>& lambdas) {
  const auto rep = validate(h);
  if (h.order() != n || rep.uniform_k != k || rep.regular_r != r)
    throw std::invalid_argument(
        "verify_regular_identity: hypergraph is not (" + std::to_string(k) +
        "," + std::to_string(r) + ")-regular of order " + std::to_string(n));
  const auto a = adjacency_matrix(h);
  const auto s = seidel_matrix(h);
  const auto s_values = eigenvalues(s);
  const double perron = static_cast<double>(r * (k - 1));
  const double sign_pow = std::pow(-2.0, static_cast<double>(n));
  IdentityReport report;
  report.check = "regular-identity";
  for (double lambda : lambdas) {
    const double denom = lambda + 1.0 + 2.0 * perron;
    if (std::abs(denom) < kPoleExclusion) {
      report.skipped.push_back(lambda);
      continue;
    }
    IdentityPoint pt;
    pt.lambda = lambda;
    pt.lhs = char_poly_eval(s, lambda);
    pt.rhs = sign_pow * ((denom - static_cast<double>(n)) / denom) *
             char_poly_eval(a, (-lambda - 1.0) / 2.0);
    pt.rel_error =
        detail::relative_gap(pt.lhs, pt.rhs,
                             detail::char_poly_bound(lambda, s_values));
    report.max_rel_error = std::max(report.max_rel_error, pt.rel_error);
    report.points.push_back(pt);
  }
  return report;
}

struct TransferTriple {
  double lambda0 = 0.0;
  std::size_t m_p = 0;
  std::size_t m_q = 0;
  bool ok = false;
};

struct TransferReport {
  std::vector<TransferTriple> triples;
  std::size_t violations = 0;
};

/// Every adjacency eigenvalue λ0 with multiplicity m_p >= 2 must give a
/// Seidel eigenvalue -2λ0-1 of multiplicity m_q >= m_p - 1. m_q counts the
/// Seidel eigenvalues within tol of -2λ0-1.
inline TransferReport verify_multiplicity_transfer(
    const Hypergraph& h, double tol = kDefaultGroupTol) {
  const auto a_values = eigenvalues(adjacency_matrix(h));
  const auto s_values = eigenvalues(seidel_matrix(h));
  TransferReport report;
  for (const auto& g : group_spectrum(a_values, tol).pairs) {
    if (g.multiplicity < 2) continue;
    const double target = -2.0 * g.value - 1.0;
    TransferTriple t{g.value, g.multiplicity, 0, false};
    for (double mu : s_values)
      if (std::abs(mu - target) <= tol) ++t.m_q;
    t.ok = t.m_q + 1 >= t.m_p;
    if (!t.ok) ++report.violations;
    report.triples.push_back(t);
  }
  return report;
}

}  // namespace hgspec
