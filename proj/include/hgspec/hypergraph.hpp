#pragma once

#include "hgspec/numeric_types.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hgspec {

using Vertex = std::size_t;
using Edge = std::vector<Vertex>;

/// Display-level name of a vertex, v_{i,j} in family notation. `group`
/// distinguishes sub-structures that reuse the same (i, j) range, e.g. the
/// two stars of a double hyperstar.
struct VertexLabel {
  std::string group;
  int i = 0;
  int j = 0;
  bool operator==(const VertexLabel&) const = default;
};

/// Generator provenance carried alongside a hypergraph so that closed forms
/// can be attached later (e.g. {"hyperstar", {4, 3}}).
struct FamilyTag {
  std::string name;
  std::vector<long> params;
  bool operator==(const FamilyTag&) const = default;
};

/// Hypergraph on vertices 0..n-1 with an ordered multiset of hyperedges.
///
/// Every edge is stored sorted and duplicate-free, has cardinality >= 2 and
/// only references vertices < n. Two edges with the same vertex set are kept
/// as distinct hyperedges. Instances are immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<Edge> edges,
             std::map<Vertex, VertexLabel> labels = {},
             std::optional<FamilyTag> family = std::nullopt)
      : n_(n),
        edges_(std::move(edges)),
        labels_(std::move(labels)),
        family_(std::move(family)) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto& edge = edges_[e];
      std::sort(edge.begin(), edge.end());
      for (Vertex v : edge)
        if (v >= n_)
          throw StructuralError("vertex " + std::to_string(v) + " in edge " +
                                std::to_string(e) + " is out of range (n=" +
                                std::to_string(n_) + ")");
      if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
        throw StructuralError("edge " + std::to_string(e) +
                              " repeats a vertex");
      if (edge.size() < 2)
        throw StructuralError("edge " + std::to_string(e) +
                              " has fewer than 2 vertices");
    }
    for (const auto& [v, label] : labels_)
      if (v >= n_)
        throw StructuralError("label for vertex " + std::to_string(v) +
                              " is out of range");
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::map<Vertex, VertexLabel>& labels() const noexcept {
    return labels_;
  }
  const std::optional<FamilyTag>& family() const noexcept { return family_; }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& e : edges_)
      for (Vertex v : e) ++d[v];
    return d;
  }

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::map<Vertex, VertexLabel> labels_;
  std::optional<FamilyTag> family_;
};

struct ValidationReport {
  std::size_t rank = 0;    // max edge cardinality
  std::size_t corank = 0;  // min edge cardinality
  std::optional<std::size_t> uniform_k;
  std::optional<std::size_t> regular_r;
  std::vector<std::size_t> degrees;
};

/// Checks raw edge lists before they become a Hypergraph.
inline void check_structure(std::size_t n, const std::vector<Edge>& edges) {
  (void)Hypergraph(n, edges);
}

inline ValidationReport validate(const Hypergraph& h) {
  ValidationReport report;
  report.degrees = h.degrees();
  if (!h.edges().empty()) {
    report.rank = 0;
    report.corank = h.edges().front().size();
    for (const auto& e : h.edges()) {
      report.rank = std::max(report.rank, e.size());
      report.corank = std::min(report.corank, e.size());
    }
    if (report.rank == report.corank) report.uniform_k = report.rank;
  }
  const auto& d = report.degrees;
  if (!d.empty() && std::all_of(d.begin(), d.end(),
                                [&](std::size_t x) { return x == d.front(); }))
    report.regular_r = d.front();
  return report;
}

/// Removes vertex v and reindexes the rest order-preservingly. Edges that
/// shrink below two vertices are dropped; principal-submatrix semantics of
/// the adjacency matrix are unaffected.
inline Hypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  if (v >= h.order())
    throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) +
                            " out of range");
  auto remap = [v](Vertex u) { return u > v ? u - 1 : u; };
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge kept;
    for (Vertex u : e)
      if (u != v) kept.push_back(remap(u));
    if (kept.size() >= 2) edges.push_back(std::move(kept));
  }
  std::map<Vertex, VertexLabel> labels;
  for (const auto& [u, label] : h.labels())
    if (u != v) labels.emplace(remap(u), label);
  return Hypergraph(h.order() - 1, std::move(edges), std::move(labels));
}

/// Relabels vertices by their sorted edge-membership lists (lexicographic,
/// ties by original index) and returns the resulting sorted edge multiset.
/// Twins tie, so equal outputs mean the hypergraphs agree up to a
/// relabeling that preserves edge order.
inline std::vector<Edge> canonical_edge_multiset(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> membership(h.order());
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (Vertex v : h.edges()[e]) membership[v].push_back(e);
  std::vector<Vertex> order(h.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return membership[a] < membership[b];
  });
  std::vector<Vertex> new_index(h.order());
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    new_index[order[pos]] = pos;
  std::vector<Edge> out;
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(new_index[v]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}
}  // namespace detail

/// Hyperstar S_n^k: n-1 hyperedges of size k sharing the center (index 0).
/// Vertex v_{i,j} (1 <= i <= n-1, 1 <= j <= k-1) sits at 1 + (i-1)(k-1) + j-1.
inline Hypergraph gen_hyperstar(long n, long k) {
  detail::require(n >= 2, "hyperstar requires n >= 2");
  detail::require(k >= 2, "hyperstar requires k >= 2");
  const std::size_t order = static_cast<std::size_t>((n - 1) * (k - 1) + 1);
  std::map<Vertex, VertexLabel> labels{{0, {"v", 0, 0}}};
  std::vector<Edge> edges;
  Vertex next = 1;
  for (long i = 1; i < n; ++i) {
    Edge e{0};
    for (long j = 1; j < k; ++j) {
      labels[next] = {"v", static_cast<int>(i), static_cast<int>(j)};
      e.push_back(next++);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(order, std::move(edges), std::move(labels),
                    FamilyTag{"hyperstar", {n, k}});
}

/// Uniform double hyperstar S_{n1,n2}^k. Vertex layout follows the five
/// canonical blocks: center 1 (index 0), star-1 pendant vertices, center 2,
/// star-2 pendant vertices, then the k-2 fill vertices of the bridge edge.
/// Edge order: star-1 edges, star-2 edges, bridge.
inline Hypergraph gen_double_hyperstar(long n1, long n2, long k) {
  detail::require(n1 >= 2 && n2 >= 2, "double hyperstar requires n1, n2 >= 2");
  detail::require(k >= 3, "double hyperstar requires k >= 3");
  const std::size_t order =
      static_cast<std::size_t>(n1 + n2 + (n1 + n2 - 1) * (k - 2));
  std::map<Vertex, VertexLabel> labels;
  std::vector<Edge> edges;
  Vertex next = 0;

  auto add_star = [&](const std::string& group, long count) {
    const Vertex center = next++;
    labels[center] = {group, 0, 0};
    for (long i = 1; i < count; ++i) {
      Edge e{center};
      for (long j = 1; j < k; ++j) {
        labels[next] = {group, static_cast<int>(i), static_cast<int>(j)};
        e.push_back(next++);
      }
      edges.push_back(std::move(e));
    }
    return center;
  };
  const Vertex c1 = add_star("a", n1);
  const Vertex c2 = add_star("b", n2);
  Edge bridge{c1, c2};
  for (long j = 1; j <= k - 2; ++j) {
    labels[next] = {"e", 0, static_cast<int>(j)};
    bridge.push_back(next++);
  }
  edges.push_back(std::move(bridge));
  return Hypergraph(order, std::move(edges), std::move(labels),
                    FamilyTag{"double-hyperstar", {n1, n2, k}});
}

/// Sunflower S^k. Index 0 is v_{0,0}; indices 1..k-1 are the petal anchors
/// v_{i,1}; the outer petal vertices v_{i,2..k} follow petal by petal.
/// Edge order: petals 1..k-1, then the core edge {v_{0,0}, v_{1,1}, ...}.
inline Hypergraph gen_sunflower(long k) {
  detail::require(k >= 2, "sunflower requires k >= 2");
  const std::size_t order = static_cast<std::size_t>(k * (k - 1) + 1);
  std::map<Vertex, VertexLabel> labels{{0, {"v", 0, 0}}};
  std::vector<Edge> edges;
  Edge core{0};
  for (long i = 1; i < k; ++i) {
    labels[static_cast<Vertex>(i)] = {"v", static_cast<int>(i), 1};
    core.push_back(static_cast<Vertex>(i));
  }
  Vertex next = static_cast<Vertex>(k);
  for (long i = 1; i < k; ++i) {
    Edge petal{static_cast<Vertex>(i)};
    for (long j = 2; j <= k; ++j) {
      labels[next] = {"v", static_cast<int>(i), static_cast<int>(j)};
      petal.push_back(next++);
    }
    edges.push_back(std::move(petal));
  }
  edges.push_back(std::move(core));
  return Hypergraph(order, std::move(edges), std::move(labels),
                    FamilyTag{"sunflower", {k}});
}

/// Complete r-uniform hypergraph K_n^r; edges in lexicographic order.
inline Hypergraph gen_complete_uniform(long n, long r) {
  detail::require(r >= 2 && r <= n, "complete hypergraph requires 2 <= r <= n");
  std::vector<Edge> edges;
  Edge current(static_cast<std::size_t>(r));
  std::iota(current.begin(), current.end(), Vertex{0});
  const auto nn = static_cast<Vertex>(n);
  const auto rr = static_cast<std::size_t>(r);
  while (true) {
    edges.push_back(current);
    std::size_t pos = rr;
    while (pos > 0 && current[pos - 1] == nn - rr + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t q = pos; q < rr; ++q) current[q] = current[q - 1] + 1;
  }
  return Hypergraph(nn, std::move(edges), {},
                    FamilyTag{"complete", {n, r}});
}

/// k-th power of a graph: every base edge receives k-2 fresh vertices,
/// numbered after the base vertices in edge order.
inline Hypergraph gen_power(const std::vector<std::pair<Vertex, Vertex>>& base,
                            std::size_t base_n, long k) {
  detail::require(k >= 2, "power requires k >= 2");
  std::vector<Edge> edges;
  Vertex next = base_n;
  for (std::size_t e = 0; e < base.size(); ++e) {
    const auto [a, b] = base[e];
    if (a >= base_n || b >= base_n || a == b)
      throw StructuralError("base edge " + std::to_string(e) +
                            " is not a valid vertex pair");
    Edge edge{a, b};
    for (long j = 0; j < k - 2; ++j) edge.push_back(next++);
    edges.push_back(std::move(edge));
  }
  return Hypergraph(next, std::move(edges), {},
                    FamilyTag{"power", {k}});
}

}  // namespace hgspec
