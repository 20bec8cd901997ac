#pragma once

// Independent reference computations used by the test suites.

#include "hgspec/hgspec.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using namespace hgspec;

inline Eigen::MatrixXd to_eigen(const IntSymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      e(i, j) = static_cast<double>(
          m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return e;
}

/// Eigenvalues by Eigen's tridiagonal QR, descending.
inline std::vector<double> eigenvalues(const IntSymMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(to_eigen(m),
                                                   Eigen::EigenvaluesOnly);
  std::vector<double> v(s.eigenvalues().data(),
                        s.eigenvalues().data() + s.eigenvalues().size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::vector<double> adjacency_values(const Hypergraph& h) {
  return oracle::eigenvalues(adjacency_matrix(h));
}

inline std::vector<double> seidel_values(const Hypergraph& h) {
  return oracle::eigenvalues(seidel_matrix(h));
}

/// Adjacency by checking every vertex pair against every edge.
inline Matrix<std::int64_t> adjacency_brute(const Hypergraph& h) {
  Matrix<std::int64_t> a(h.order(), h.order(), 0);
  for (Vertex i = 0; i < h.order(); ++i)
    for (Vertex j = 0; j < h.order(); ++j) {
      if (i == j) continue;
      for (const auto& e : h.edges())
        if (std::find(e.begin(), e.end(), i) != e.end() &&
            std::find(e.begin(), e.end(), j) != e.end())
          ++a(i, j);
    }
  return a;
}

/// Sum of entries of A^l by repeated dense BigInt matrix multiplication.
inline BigInt walk_count_naive(const Hypergraph& h, std::size_t l) {
  const BigIntMatrix a = adjacency_matrix(h).to_big();
  BigIntMatrix p = BigIntMatrix::identity(h.order());
  for (std::size_t i = 0; i < l; ++i) p = p * a;
  BigInt s = 0;
  for (const auto& x : p.data()) s += x;
  return s;
}

/// Rank over Q by plain Gaussian elimination with rationals.
inline std::size_t rank_rational(const BigIntMatrix& m) {
  std::vector<std::vector<BigRational>> a(m.rows(),
                                          std::vector<BigRational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = BigRational(m(i, j));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const BigRational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// det(λI - M) as the product of (λ - μ) over oracle eigenvalues.
inline double char_poly_product(const IntSymMatrix& m, double lambda) {
  double p = 1.0;
  for (double mu : oracle::eigenvalues(m)) p *= lambda - mu;
  return p;
}

/// Random hypergraph on n vertices with m edges of random size 2..max_size.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n,
                                    std::size_t m, std::size_t max_size) {
  std::vector<Edge> edges;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> size_dist(
        2, std::min(max_size, n));
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    for (std::size_t e = 0; e < m; ++e) {
      std::shuffle(all.begin(), all.end(), rng);
      edges.emplace_back(all.begin(),
                         all.begin() + static_cast<long>(size_dist(rng)));
    }
  }
  return Hypergraph(n, std::move(edges));
}

/// The 5-vertex worked example: edges {v1,v2,v3}, {v2,v3,v4,v5}, {v1,v2,v4}.
inline Hypergraph worked_example() {
  return Hypergraph(5, {{0, 1, 2}, {1, 2, 3, 4}, {0, 1, 3}});
}

inline Matrix<std::int64_t> worked_example_seidel() {
  const std::int64_t rows[5][5] = {{0, -3, -1, -1, 1},
                                   {-3, 0, -3, -3, -1},
                                   {-1, -3, 0, -1, -1},
                                   {-1, -3, -1, 0, -1},
                                   {1, -1, -1, -1, 0}};
  Matrix<std::int64_t> s(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) s(i, j) = rows[i][j];
  return s;
}

struct FamilyCase {
  std::string name;
  Hypergraph h;
};

/// The standard generator sweep of all four families.
inline std::vector<FamilyCase> family_suite() {
  std::vector<FamilyCase> out;
  for (long n = 3; n <= 8; ++n)
    for (long k = 2; k <= 6; ++k)
      out.push_back({"hyperstar", gen_hyperstar(n, k)});
  for (long a = 2; a <= 5; ++a)
    for (long b = 2; b <= 5; ++b)
      for (long k = 3; k <= 5; ++k)
        out.push_back({"double-hyperstar", gen_double_hyperstar(a, b, k)});
  for (long k = 2; k <= 8; ++k) out.push_back({"sunflower", gen_sunflower(k)});
  for (long n = 3; n <= 8; ++n)
    for (long r = 2; r <= n; ++r)
      out.push_back({"complete", gen_complete_uniform(n, r)});
  return out;
}

}  // namespace oracle
