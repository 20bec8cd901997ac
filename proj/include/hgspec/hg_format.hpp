#pragma once

// ".hg" text format and the plain matrix dump format.
//
//   .hg:   first content line is the vertex count n; every following
//          non-empty line is one hyperedge as whitespace-separated 0-based
//          vertex indices. '#' starts a comment. A comment of the form
//          "# family: <name> <p1> <p2> ..." records generator provenance.
//   dump:  first line n, then n rows of n integers.

#include "hgspec/hypergraph.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace hgspec {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string strip_comment(const std::string& line,
                                 std::string* comment = nullptr) {
  const auto hash = line.find('#');
  if (hash == std::string::npos) return line;
  if (comment) *comment = line.substr(hash + 1);
  return line.substr(0, hash);
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses one non-negative integer token, rejecting signs and trailing junk.
inline std::size_t parse_index(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + tok + "'");
  }
}

inline std::optional<FamilyTag> parse_family_comment(const std::string& c) {
  std::istringstream in(c);
  std::string key;
  in >> key;
  if (key != "family:") return std::nullopt;
  FamilyTag tag;
  if (!(in >> tag.name)) return std::nullopt;
  long p;
  while (in >> p) tag.params.push_back(p);
  return tag;
}

}  // namespace detail

inline Hypergraph parse_hg(std::istream& in) {
  std::optional<std::size_t> n;
  std::optional<FamilyTag> family;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string comment;
    const std::string body = detail::strip_comment(raw, &comment);
    if (!comment.empty() && !family)
      family = detail::parse_family_comment(comment);
    if (detail::blank(body)) continue;
    std::istringstream tokens(body);
    std::string tok;
    if (!n) {
      tokens >> tok;
      n = detail::parse_index(tok, line_no);
      if (tokens >> tok)
        throw ParseError(line_no, "vertex-count line has extra tokens");
      continue;
    }
    Edge e;
    while (tokens >> tok) {
      const auto v = detail::parse_index(tok, line_no);
      if (v >= *n)
        throw ParseError(line_no, "vertex " + std::to_string(v) +
                                      " out of range (n=" +
                                      std::to_string(*n) + ")");
      e.push_back(v);
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line_no);
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
  try {
    return Hypergraph(*n, std::move(edges), {}, std::move(family));
  } catch (const StructuralError& err) {
    // Map "edge i" back to its source line.
    const std::string msg = err.what();
    const auto pos = msg.find("edge ");
    std::size_t line = line_no;
    if (pos != std::string::npos) {
      std::size_t idx = std::stoul(msg.substr(pos + 5));
      if (idx < edge_lines.size()) line = edge_lines[idx];
    }
    throw ParseError(line, msg);
  }
}

inline Hypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  return parse_hg(in);
}

inline void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.order() << '\n';
  if (const auto& f = h.family()) {
    out << "# family: " << f->name;
    for (long p : f->params) out << ' ' << p;
    out << '\n';
  }
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

inline std::string to_hg_string(const Hypergraph& h) {
  std::ostringstream out;
  write_hg(out, h);
  return out.str();
}

inline void write_matrix_dump(std::ostream& out,
                              const Matrix<std::int64_t>& m) {
  out << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

/// Reads a dump written by write_matrix_dump. Asymmetric content is a
/// structural error.
inline Matrix<std::int64_t> read_matrix_dump(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n)) throw ParseError(1, "missing matrix dimension");
  Matrix<std::int64_t> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(in >> m(i, j)))
        throw ParseError(i + 2, "expected " + std::to_string(n) + " integers");
  std::string extra;
  if (in >> extra) throw ParseError(n + 2, "trailing content after matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw StructuralError("matrix dump is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
  return m;
}

/// Multigraph with a_ij parallel 2-edges {i, j}; its adjacency matrix is a.
inline Hypergraph hypergraph_from_adjacency(const Matrix<std::int64_t>& a) {
  if (!a.is_symmetric())
    throw StructuralError("adjacency matrix is not symmetric");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0)
      throw StructuralError("adjacency matrix has nonzero diagonal at row " +
                            std::to_string(i));
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (a(i, j) < 0)
        throw StructuralError("adjacency matrix has a negative entry at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      for (std::int64_t c = 0; c < a(i, j); ++c) edges.push_back({i, j});
    }
  }
  return Hypergraph(a.rows(), std::move(edges));
}

/// Inverts S = J - I - 2A: off-diagonal entries must be odd and at most 1.
inline Hypergraph hypergraph_from_seidel(const Matrix<std::int64_t>& s) {
  if (!s.is_symmetric())
    throw StructuralError("Seidel matrix is not symmetric");
  Matrix<std::int64_t> a(s.rows(), s.cols(), 0);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i == j) {
        if (s(i, i) != 0)
          throw StructuralError("Seidel matrix has nonzero diagonal at row " +
                                std::to_string(i));
        continue;
      }
      if (s(i, j) > 1 || (1 - s(i, j)) % 2 != 0)
        throw StructuralError("entry (" + std::to_string(i) + "," +
                              std::to_string(j) +
                              ") is not of the form 1 - 2a with a >= 0");
      a(i, j) = (1 - s(i, j)) / 2;
    }
  return hypergraph_from_adjacency(a);
}

}  // namespace hgspec
