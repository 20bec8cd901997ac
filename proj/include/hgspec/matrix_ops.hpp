#pragma once

#include "hgspec/hypergraph.hpp"
#include "hgspec/numeric_types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hgspec {

/// Dense symmetric integer matrix (A, S, J, I and quotient inputs).
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(std::size_t n) : m_(n, n, 0) {}
  explicit IntSymMatrix(Matrix<std::int64_t> m) : m_(std::move(m)) {
    if (!m_.is_symmetric())
      throw StructuralError("IntSymMatrix requires a square symmetric matrix");
  }

  std::size_t size() const noexcept { return m_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }
  const Matrix<std::int64_t>& matrix() const noexcept { return m_; }

  RealMatrix to_real() const { return m_.cast<double>(); }
  BigIntMatrix to_big() const {
    BigIntMatrix out(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) out(i, j) = m_(i, j);
    return out;
  }

  /// Matrix with row and column `skip` removed.
  IntSymMatrix principal_submatrix(std::size_t skip) const {
    const std::size_t n = size();
    Matrix<std::int64_t> out(n - 1, n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0, c = 0; j < n; ++j) {
        if (j == skip) continue;
        out(r, c++) = m_(i, j);
      }
      ++r;
    }
    return IntSymMatrix(std::move(out));
  }

  std::int64_t max_abs() const {
    std::int64_t best = 0;
    for (auto v : m_.data()) best = std::max(best, v < 0 ? -v : v);
    return best;
  }

  bool operator==(const IntSymMatrix&) const = default;

 private:
  Matrix<std::int64_t> m_;
};

inline IntSymMatrix all_ones(std::size_t n) {
  return IntSymMatrix(Matrix<std::int64_t>(n, n, 1));
}

inline IntSymMatrix identity_matrix(std::size_t n) {
  return IntSymMatrix(Matrix<std::int64_t>::identity(n));
}

/// a_ij = number of hyperedges containing both v_i and v_j; zero diagonal.
inline IntSymMatrix adjacency_matrix(const Hypergraph& h) {
  Matrix<std::int64_t> a(h.order(), h.order(), 0);
  for (const auto& e : h.edges())
    for (std::size_t p = 0; p < e.size(); ++p)
      for (std::size_t q = p + 1; q < e.size(); ++q) {
        ++a(e[p], e[q]);
        ++a(e[q], e[p]);
      }
  return IntSymMatrix(std::move(a));
}

/// S = J - I - 2A.
inline IntSymMatrix seidel_matrix(const Hypergraph& h) {
  const auto a = adjacency_matrix(h);
  const std::size_t n = h.order();
  Matrix<std::int64_t> s(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s(i, j) = (i == j ? 0 : 1) - 2 * a(i, j);
  return IntSymMatrix(std::move(s));
}

/// S x via edge-local sums: (Sx)_v = x(V - {v}) - 2 sum_{e ∋ v} x(e - {v}).
/// Works for any ring-like T (double, int64, BigInt).
template <class T>
std::vector<T> seidel_apply(const Hypergraph& h, std::span<const T> x) {
  if (x.size() != h.order())
    throw std::invalid_argument("seidel_apply: vector has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(h.order()));
  T total{0};
  for (const auto& xi : x) total += xi;
  std::vector<T> out(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) out[v] = total - x[v];
  for (const auto& e : h.edges()) {
    T edge_sum{0};
    for (Vertex u : e) edge_sum += x[u];
    for (Vertex u : e) out[u] -= 2 * (edge_sum - x[u]);
  }
  return out;
}

template <class T>
std::vector<T> seidel_apply(const Hypergraph& h, const std::vector<T>& x) {
  return seidel_apply<T>(h, std::span<const T>(x));
}

inline std::vector<BigInt> multiply(const IntSymMatrix& m,
                                    const std::vector<BigInt>& x) {
  const std::size_t n = m.size();
  std::vector<BigInt> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (const auto mij = m(i, j); mij != 0) acc += mij * x[j];
    y[i] = std::move(acc);
  }
  return y;
}

/// Total walk counts N_0..N_max_length of a hypergraph, N_l = j^T A^l j.
struct WalkTable {
  std::vector<BigInt> counts;
};

inline WalkTable walk_table(const Hypergraph& h, std::size_t max_length) {
  const auto a = adjacency_matrix(h);
  std::vector<BigInt> w(h.order(), BigInt(1));
  WalkTable table;
  table.counts.reserve(max_length + 1);
  for (std::size_t l = 0;; ++l) {
    BigInt sum = 0;
    for (const auto& x : w) sum += x;
    table.counts.push_back(std::move(sum));
    if (l == max_length) break;
    w = multiply(a, w);
  }
  return table;
}

/// Sum of all entries of A^l, exact.
inline BigInt walk_count(const Hypergraph& h, std::size_t length) {
  return walk_table(h, length).counts.back();
}

/// Columns j, Mj, M^2 j, ..., M^{n-1} j.
inline BigIntMatrix krylov_walk_matrix(const IntSymMatrix& m) {
  const std::size_t n = m.size();
  BigIntMatrix k(n, n);
  std::vector<BigInt> col(n, BigInt(1));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) k(i, c) = col[i];
    if (c + 1 < n) col = multiply(m, col);
  }
  return k;
}

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t exact_rank(BigIntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev_pivot;
      m(i, c) = 0;
    }
    prev_pivot = m(rank, c);
    ++rank;
  }
  return rank;
}

/// Dimension of span{j, Mj, M^2 j, ...}. Equals exact_rank of
/// krylov_walk_matrix(m) but stops at the first dependent column, since the
/// span is M-invariant from that point on.
inline std::size_t krylov_dimension(const IntSymMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 0;
  struct Row {
    std::vector<BigInt> v;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  std::vector<BigInt> col(n, BigInt(1));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<BigInt> r = col;
    for (const auto& b : basis) {
      if (r[b.pivot] == 0) continue;
      const BigInt f = r[b.pivot], g = b.v[b.pivot];
      for (std::size_t i = 0; i < n; ++i) r[i] = g * r[i] - f * b.v[i];
    }
    BigInt content = 0;
    for (const auto& x : r)
      if (x != 0) content = content == 0 ? abs(x) : gcd(content, abs(BigInt(x)));
    if (content == 0) break;
    std::size_t pivot = 0;
    while (r[pivot] == 0) ++pivot;
    for (auto& x : r) x /= content;
    basis.push_back({std::move(r), pivot});
    col = multiply(m, col);
  }
  return basis.size();
}

}  // namespace hgspec
