#pragma once

#include "hgspec/hypergraph.hpp"
#include "hgspec/matrix_ops.hpp"
#include "hgspec/numeric_types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hgspec {

inline constexpr double kDefaultGroupTol = 1e-7;
inline constexpr double kDefaultMainTol = 1e-6;

/// Eigenpairs sorted by descending eigenvalue; column c of `vectors` belongs
/// to values[c]. `residual` is max_c ||M x_c - λ_c x_c||_inf.
struct EigenDecomposition {
  std::vector<double> values;
  RealMatrix vectors;
  double residual = 0.0;
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi eigensolver for real symmetric matrices.
///
/// Sweeps over all (p, q) pairs applying Rutishauser-style rotations until
/// every off-diagonal magnitude is below 1e-12 * (1 + max|entry|). Eigenvector
/// signs are normalised so the first entry above 1e-12 in magnitude is
/// positive; exact value ties are ordered by eigenvector lexicographically.
inline EigenDecomposition eigen_symmetric(const RealMatrix& input,
                                          std::size_t max_sweeps = 100) {
  if (!input.square())
    throw StructuralError("eigen_symmetric: matrix is not square");
  const std::size_t n = input.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(input(i, j) - input(j, i)) >
          1e-12 * (1.0 + std::abs(input(i, j))))
        throw StructuralError("eigen_symmetric: matrix is not symmetric");
      scale = std::max(scale, std::abs(input(i, j)));
    }
  const double threshold = 1e-12 * (1.0 + scale);

  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);
  EigenDecomposition out;

  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
  };

  std::size_t sweep = 0;
  for (; max_off() >= threshold; ++sweep) {
    if (sweep == max_sweeps)
      throw ConvergenceError("eigen_symmetric: no convergence in " +
                             std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < threshold * 1e-3) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
            a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
          }
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
  }
  out.sweeps = sweep;

  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r)
      if (std::abs(v(r, c)) > 1e-12) {
        if (v(r, c) < 0)
          for (std::size_t i = 0; i < n; ++i) v(i, c) = -v(i, c);
        break;
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (a(x, x) != a(y, y)) return a(x, x) > a(y, y);
    for (std::size_t r = 0; r < n; ++r)
      if (v(r, x) != v(r, y)) return v(r, x) > v(r, y);
    return x < y;
  });

  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }

  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      double mx = 0.0;
      for (std::size_t j = 0; j < n; ++j) mx += input(i, j) * out.vectors(j, c);
      out.residual = std::max(
          out.residual, std::abs(mx - out.values[c] * out.vectors(i, c)));
    }
  return out;
}

inline EigenDecomposition eigen_symmetric(const IntSymMatrix& m) {
  return eigen_symmetric(m.to_real());
}

inline std::vector<double> eigenvalues(const IntSymMatrix& m) {
  return eigen_symmetric(m).values;
}

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Eigenvalues grouped into (value, multiplicity) pairs.
struct Spectrum {
  std::vector<SpectrumEntry> pairs;
  double tol = kDefaultGroupTol;

  std::size_t total_multiplicity() const {
    std::size_t s = 0;
    for (const auto& p : pairs) s += p.multiplicity;
    return s;
  }
};

/// Greedy left-to-right clustering of descending values: a value joins the
/// current group iff it lies within tol of the group's running mean.
inline Spectrum group_spectrum(const std::vector<double>& values, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("group_spectrum: tol must be > 0");
  Spectrum s;
  s.tol = tol;
  double sum = 0.0;
  for (double x : values) {
    if (!s.pairs.empty() && std::abs(x - s.pairs.back().value) <= tol) {
      auto& g = s.pairs.back();
      sum += x;
      ++g.multiplicity;
      g.value = sum / static_cast<double>(g.multiplicity);
    } else {
      s.pairs.push_back({x, 1});
      sum = x;
    }
  }
  return s;
}

/// Index ranges of groups, in the same greedy order as group_spectrum.
inline std::vector<std::vector<std::size_t>> group_indices(
    const std::vector<double>& values, double tol) {
  std::vector<std::vector<std::size_t>> groups;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!groups.empty() &&
        std::abs(values[i] - sum / static_cast<double>(groups.back().size())) <=
            tol) {
      groups.back().push_back(i);
      sum += values[i];
    } else {
      groups.push_back({i});
      sum = values[i];
    }
  }
  return groups;
}

/// det(M) by LU with partial pivoting.
inline double determinant(RealMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (m(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m(r, c) / m(c, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

/// det(λI - M), monic in λ.
inline double char_poly_eval(const RealMatrix& m, double lambda) {
  RealMatrix shifted(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      shifted(i, j) = (i == j ? lambda : 0.0) - m(i, j);
  return determinant(std::move(shifted));
}

inline double char_poly_eval(const IntSymMatrix& m, double lambda) {
  return char_poly_eval(m.to_real(), lambda);
}

inline double energy_of(const std::vector<double>& values) {
  double e = 0.0;
  for (double x : values) e += std::abs(x);
  return e;
}

/// Sum of |μ_i| over the Seidel eigenvalues.
inline double seidel_energy(const Hypergraph& h) {
  return energy_of(eigenvalues(seidel_matrix(h)));
}

struct MainEigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  double projection = 0.0;  // norm of the projection of j onto the eigenspace
  bool is_main = false;
};

/// Groups the spectrum of M and flags each group whose eigenspace is not
/// orthogonal to the all-ones vector (projection norm > main_tol * sqrt(n)).
inline std::vector<MainEigenvalue> main_eigenvalues(
    const EigenDecomposition& d, double main_tol = kDefaultMainTol,
    double group_tol = kDefaultGroupTol) {
  if (!(main_tol > 0))
    throw std::invalid_argument("main_eigenvalues: tol must be > 0");
  const std::size_t n = d.values.size();
  std::vector<MainEigenvalue> out;
  for (const auto& group : group_indices(d.values, group_tol)) {
    MainEigenvalue m;
    double sum = 0.0, sq = 0.0;
    for (std::size_t c : group) {
      sum += d.values[c];
      double dot = 0.0;
      for (std::size_t r = 0; r < n; ++r) dot += d.vectors(r, c);
      sq += dot * dot;
    }
    m.multiplicity = group.size();
    m.value = sum / static_cast<double>(group.size());
    m.projection = std::sqrt(sq);
    m.is_main = m.projection > main_tol * std::sqrt(static_cast<double>(n));
    out.push_back(m);
  }
  return out;
}

inline std::vector<MainEigenvalue> main_eigenvalues(
    const RealMatrix& m, double main_tol = kDefaultMainTol,
    double group_tol = kDefaultGroupTol) {
  return main_eigenvalues(eigen_symmetric(m), main_tol, group_tol);
}

inline std::vector<MainEigenvalue> main_eigenvalues(
    const IntSymMatrix& m, double main_tol = kDefaultMainTol,
    double group_tol = kDefaultGroupTol) {
  return main_eigenvalues(m.to_real(), main_tol, group_tol);
}

inline std::size_t count_main(const std::vector<MainEigenvalue>& mains) {
  return static_cast<std::size_t>(
      std::count_if(mains.begin(), mains.end(),
                    [](const MainEigenvalue& m) { return m.is_main; }));
}

/// Number of main eigenvalues as the exact rank of [j Mj ... M^{n-1}j].
inline std::size_t main_count_via_rank(const IntSymMatrix& m) {
  return krylov_dimension(m);
}

/// Cauchy interlacing λ_i >= μ_i >= λ_{n-m+i} (descending inputs), with
/// 1e-9 slack for round-off.
inline bool check_interlacing(const std::vector<double>& parent,
                              const std::vector<double>& child,
                              double slack = 1e-9) {
  const std::size_t n = parent.size(), m = child.size();
  if (m > n)
    throw std::invalid_argument(
        "check_interlacing: child longer than parent");
  for (std::size_t i = 0; i < m; ++i) {
    if (child[i] > parent[i] + slack) return false;
    if (child[i] < parent[n - m + i] - slack) return false;
  }
  return true;
}

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Walk generating function H(t) = sum_j C_j / (1 - t λ_j) reconstructed
/// from an orthonormal eigendecomposition of A, with C_j = (sum_i x_ij)^2.
struct WalkGenEval {
  std::vector<double> coefficients;
  std::vector<double> values;

  /// Terms with C_j at or below this are dropped.
  static constexpr double kNegligibleWeight = 1e-20;

  double operator()(double t) const {
    double h = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (coefficients[j] <= kNegligibleWeight) continue;
      if (values[j] != 0.0 && std::abs(t - 1.0 / values[j]) < 1e-12)
        throw PoleError("walk generating function: t is at a pole");
      h += coefficients[j] / (1.0 - t * values[j]);
    }
    return h;
  }

  /// sum_j C_j λ_j^l.
  double walks(std::size_t length) const {
    double s = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j)
      s += coefficients[j] * std::pow(values[j], static_cast<double>(length));
    return s;
  }

  double weight_sum() const {
    return std::accumulate(coefficients.begin(), coefficients.end(), 0.0);
  }
};

inline WalkGenEval walk_gen_from_spectrum(const EigenDecomposition& d) {
  WalkGenEval w;
  w.values = d.values;
  const std::size_t n = d.values.size();
  w.coefficients.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) sum += d.vectors(r, c);
    w.coefficients[c] = sum * sum;
  }
  return w;
}

/// Greedy matching of two descending value lists of equal length: the
/// largest per-position gap after sorting (optimal for 1-D matching).
inline double max_sorted_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("max_sorted_gap: size mismatch");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace hgspec
