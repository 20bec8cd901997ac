#pragma once

#include "hgspec/closed_forms.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/structure.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace hgspec {

using nlohmann::json;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Polynomial& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

/// Short human-readable form of a descriptor, e.g. "(3+√33)/2".
inline std::string describe(const EigDescriptor& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RationalValue>) {
          return v.q.str();
        } else if constexpr (std::is_same_v<T, SurdValue>) {
          std::string out = "(" + to_string(v.a) + (v.sign > 0 ? "+" : "-") +
                            "√" + to_string(v.d) + ")";
          if (v.c != 1) out += "/" + to_string(v.c);
          return out;
        } else if constexpr (std::is_same_v<T, PolyRootValue>) {
          return "root " + std::to_string(v.index + 1) + " of " +
                 to_string(v.poly);
        } else {
          return "trig branch " + std::to_string(v.branch + 1);
        }
      },
      d.kind);
}

inline json to_json(const Spectrum& s) {
  json arr = json::array();
  for (const auto& p : s.pairs)
    arr.push_back({{"value", p.value}, {"multiplicity", p.multiplicity}});
  return arr;
}

inline json descriptor_params(const EigDescriptor& d) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RationalValue>) {
          return {{"p", to_string(boost::multiprecision::numerator(v.q))},
                  {"q", to_string(boost::multiprecision::denominator(v.q))}};
        } else if constexpr (std::is_same_v<T, SurdValue>) {
          return {{"a", to_string(v.a)},
                  {"d", to_string(v.d)},
                  {"c", to_string(v.c)},
                  {"sign", v.sign}};
        } else if constexpr (std::is_same_v<T, PolyRootValue>) {
          json coeffs = json::array();
          const auto& c = v.poly.coefficients();
          for (auto it = c.rbegin(); it != c.rend(); ++it)
            coeffs.push_back(to_string(*it));
          return {{"coefficients", coeffs}, {"index", v.index}};
        } else {
          return {{"shift", v.shift},
                  {"amplitude", v.amplitude},
                  {"theta", v.theta},
                  {"branch", v.branch}};
        }
      },
      d.kind);
}

inline json to_json(const EigDescriptor& d) {
  return {{"kind", d.kind_name()},
          {"params", descriptor_params(d)},
          {"multiplicity", d.multiplicity},
          {"value", d.value()}};
}

inline json to_json(const ClosedFormSpectrum& c) {
  json arr = json::array();
  for (const auto& d : c.descriptors()) arr.push_back(to_json(d));
  return arr;
}

inline json to_json(const std::vector<MainEigenvalue>& mains) {
  json arr = json::array();
  for (const auto& m : mains)
    arr.push_back({{"value", m.value},
                   {"multiplicity", m.multiplicity},
                   {"projection", m.projection},
                   {"main", m.is_main}});
  return arr;
}

inline json to_json(const IdentityReport& r, const std::string& hypergraph) {
  json skipped = json::array();
  for (double s : r.skipped) skipped.push_back(s);
  return {{"hypergraph", hypergraph},
          {"check", r.check},
          {"max_rel_error", r.max_rel_error},
          {"points_used", r.points_used()},
          {"points_skipped", skipped}};
}

inline json to_json(const TransferReport& r, const std::string& hypergraph) {
  json triples = json::array();
  for (const auto& t : r.triples)
    triples.push_back({{"lambda0", t.lambda0},
                       {"m_p", t.m_p},
                       {"m_q", t.m_q},
                       {"ok", t.ok}});
  return {{"hypergraph", hypergraph},
          {"check", "multiplicity"},
          {"violations", r.violations},
          {"triples", triples}};
}

inline json to_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const QuotientResult& q) {
  json out{{"q", to_json(q.q)},
           {"block_sizes", q.block_sizes},
           {"equitable", q.equitable}};
  if (q.witness)
    out["witness"] = {{"block_i", q.witness->block_i},
                      {"block_j", q.witness->block_j},
                      {"row_a", q.witness->row_a},
                      {"row_b", q.witness->row_b},
                      {"sum_a", q.witness->sum_a},
                      {"sum_b", q.witness->sum_b}};
  return out;
}

}  // namespace hgspec
