// hgspec command-line front end.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage, I/O, parse or structural errors.

#include "hgspec/hgspec.hpp"
#include "hgspec/report_json.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hgspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Options

struct InputOptions {
  std::string input;
  std::string input_format = "auto";
  std::string family;
  std::string n, k, n1, n2, r;
};

struct OutputOptions {
  std::string format = "text";
  std::string matrix = "seidel";
  double tol_group = kDefaultGroupTol;
  double tol_main = kDefaultMainTol;
  std::string dump_matrix;
};

struct Labeled {
  std::string label;
  Hypergraph h;
};

std::vector<long> parse_range(const std::string& text, const std::string& flag) {
  std::vector<long> out;
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size())
      throw UsageError("--" + flag + ": expected an integer, got '" + s + "'");
    return v;
  };
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_long(item));
      continue;
    }
    const long lo = to_long(item.substr(0, dots));
    const long hi = to_long(item.substr(dots + 2));
    if (hi < lo) throw UsageError("--" + flag + ": empty range '" + item + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("--" + flag + ": no values");
  return out;
}

std::vector<long> range_or(const std::string& text, const std::string& flag,
                           long lo, long hi) {
  if (!text.empty()) return parse_range(text, flag);
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string family_label(const FamilyTag& f) {
  std::string s = f.name + "(";
  for (std::size_t i = 0; i < f.params.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.params[i]);
  return s + ")";
}

Hypergraph generate(const std::string& family, const std::vector<long>& p) {
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw UsageError(family + " takes " + std::to_string(count) +
                       " parameter(s), got " + std::to_string(p.size()));
  };
  if (family == "hyperstar") {
    need(2);
    return gen_hyperstar(p[0], p[1]);
  }
  if (family == "double-hyperstar") {
    need(3);
    return gen_double_hyperstar(p[0], p[1], p[2]);
  }
  if (family == "sunflower") {
    need(1);
    return gen_sunflower(p[0]);
  }
  if (family == "complete") {
    need(2);
    return gen_complete_uniform(p[0], p[1]);
  }
  throw UsageError("unknown family '" + family +
                   "' (expected hyperstar, double-hyperstar, sunflower, "
                   "complete or power)");
}

// Parameter sweep for --family; unset ranges default to the standard suite.
std::vector<Labeled> family_sweep(const InputOptions& in) {
  std::vector<std::vector<long>> tuples;
  if (in.family == "hyperstar") {
    for (long n : range_or(in.n, "n", 3, 8))
      for (long k : range_or(in.k, "k", 2, 6)) tuples.push_back({n, k});
  } else if (in.family == "double-hyperstar") {
    for (long a : range_or(in.n1, "n1", 2, 5))
      for (long b : range_or(in.n2, "n2", 2, 5))
        for (long k : range_or(in.k, "k", 3, 5)) tuples.push_back({a, b, k});
  } else if (in.family == "sunflower") {
    for (long k : range_or(in.k, "k", 2, 8)) tuples.push_back({k});
  } else if (in.family == "complete") {
    for (long n : range_or(in.n, "n", 3, 8)) {
      const auto rs = in.r.empty() ? range_or("", "r", 2, n)
                                   : parse_range(in.r, "r");
      for (long r : rs) tuples.push_back({n, r});
    }
  } else {
    generate(in.family, {});  // throws the unknown-family usage error
  }
  std::vector<Labeled> out;
  for (const auto& t : tuples) {
    auto h = generate(in.family, t);
    out.push_back({family_label(*h.family()), std::move(h)});
  }
  return out;
}

bool looks_like_dump(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream tok(line);
    std::vector<std::string> row;
    std::string t;
    while (tok >> t) row.push_back(t);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty() || rows[0].size() != 1) return false;
  std::size_t n = 0;
  try {
    n = std::stoul(rows[0][0]);
  } catch (const std::exception&) {
    return false;
  }
  if (n == 0 || rows.size() != n + 1) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (rows[i].size() != n) return false;
  // A dump has a zero diagonal; an .hg edge never repeats a vertex, so a
  // 0 at position i on line i+1 together with the shape is decisive enough.
  for (std::size_t i = 1; i <= n; ++i)
    if (rows[i][i - 1] != "0") return false;
  return true;
}

Hypergraph load_file(const InputOptions& in) {
  std::ifstream file(in.input);
  if (!file) throw std::ios_base::failure("cannot open '" + in.input + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  std::string fmt = in.input_format;
  if (fmt == "auto") fmt = looks_like_dump(text) ? "dump" : "hg";
  if (fmt == "hg") return parse_hg(text);
  std::istringstream dump(text);
  const auto m = read_matrix_dump(dump);
  bool negative = false;
  for (auto v : m.data()) negative = negative || v < 0;
  if (fmt == "adjacency-dump" || (fmt == "dump" && !negative))
    return hypergraph_from_adjacency(m);
  if (fmt == "seidel-dump" || fmt == "dump") return hypergraph_from_seidel(m);
  throw UsageError("unknown --input-format '" + in.input_format + "'");
}

std::vector<Labeled> load_inputs(const InputOptions& in) {
  const bool has_file = !in.input.empty();
  const bool has_family = !in.family.empty();
  if (has_file == has_family)
    throw UsageError("give exactly one input source: --input FILE or --family");
  if (has_family) return family_sweep(in);
  return {{in.input, load_file(in)}};
}

Labeled load_single(const InputOptions& in) {
  auto all = load_inputs(in);
  if (all.size() != 1)
    throw UsageError("this command takes a single hypergraph; the family "
                     "ranges select " + std::to_string(all.size()));
  return std::move(all.front());
}

// Closed forms apply only if the family header regenerates this hypergraph.
std::optional<ClosedFormSpectrum> attached_closed_form(const Hypergraph& h,
                                                       bool seidel) {
  const auto& f = h.family();
  if (!f) return std::nullopt;
  try {
    const auto regen = generate(f->name, f->params);
    if (regen.order() != h.order() || regen.edges() != h.edges())
      return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return closed_form_for(*f, seidel);
}

IntSymMatrix select_matrix(const Hypergraph& h, const std::string& which) {
  if (which == "seidel") return seidel_matrix(h);
  if (which == "adjacency") return adjacency_matrix(h);
  throw UsageError("--matrix must be 'adjacency' or 'seidel'");
}

void maybe_dump(const OutputOptions& out, const IntSymMatrix& m) {
  if (out.dump_matrix.empty()) return;
  std::ofstream f(out.dump_matrix);
  if (!f) throw std::ios_base::failure("cannot write '" + out.dump_matrix + "'");
  write_matrix_dump(f, m.matrix());
}

std::string csv_num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string txt_num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << (std::abs(v) < 1e-13 ? 0.0 : v);
  return os.str();
}

void check_format(const std::string& f) {
  if (f != "text" && f != "json" && f != "csv")
    throw UsageError("--format must be text, json or csv");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_gen(const std::string& family, const std::vector<std::string>& args,
            const std::string& out_path) {
  Hypergraph h;
  if (family == "power") {
    // power K BASE_N a-b a-b ...
    if (args.size() < 2)
      throw UsageError("power takes K BASE_N followed by base edges a-b");
    const long k = parse_range(args[0], "k").front();
    const long base_n = parse_range(args[1], "base_n").front();
    std::vector<std::pair<Vertex, Vertex>> base;
    for (std::size_t i = 2; i < args.size(); ++i) {
      const auto dash = args[i].find('-');
      if (dash == std::string::npos)
        throw UsageError("base edge '" + args[i] + "' must look like a-b");
      const long a = parse_range(args[i].substr(0, dash), "edge").front();
      const long b = parse_range(args[i].substr(dash + 1), "edge").front();
      if (a < 0 || b < 0) throw UsageError("negative vertex in base edge");
      base.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (base_n < 0) throw UsageError("negative base order");
    h = gen_power(base, static_cast<std::size_t>(base_n), k);
  } else {
    std::vector<long> p;
    for (const auto& a : args) p.push_back(parse_range(a, "param").front());
    h = generate(family, p);
  }
  const auto rep = validate(h);
  std::ostringstream report;
  report << "order " << h.order() << ", edges " << h.edge_count();
  if (rep.uniform_k) report << ", uniform k=" << *rep.uniform_k;
  else report << ", rank " << rep.rank << ", corank " << rep.corank;
  if (rep.regular_r) report << ", regular r=" << *rep.regular_r;
  if (out_path.empty()) {
    write_hg(std::cout, h);
    std::cerr << report.str() << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::ios_base::failure("cannot write '" + out_path + "'");
    write_hg(f, h);
    std::cout << "wrote " << out_path << ": " << report.str() << '\n';
  }
  return kExitOk;
}

// Descriptor whose value matches v most closely within 1e-6.
const EigDescriptor* match_descriptor(const ClosedFormSpectrum& cf, double v) {
  const EigDescriptor* best = nullptr;
  double gap = 1e-6;
  for (const auto& d : cf.descriptors())
    if (std::abs(d.value() - v) <= gap) {
      gap = std::abs(d.value() - v);
      best = &d;
    }
  return best;
}

int cmd_spectrum(const InputOptions& in, const OutputOptions& out) {
  check_format(out.format);
  const auto [label, h] = load_single(in);
  const auto m = select_matrix(h, out.matrix);
  maybe_dump(out, m);
  const auto d = eigen_symmetric(m);
  const auto grouped = group_spectrum(d.values, out.tol_group);
  const auto mains = main_eigenvalues(d, out.tol_main, out.tol_group);
  const double energy = energy_of(d.values);
  const auto cf = attached_closed_form(h, out.matrix == "seidel");

  if (out.format == "json") {
    json j{{"hypergraph", label},
           {"matrix", out.matrix},
           {"order", h.order()},
           {"spectrum", to_json(grouped)},
           {"energy", energy},
           {"main", to_json(mains)},
           {"closed_form", nullptr}};
    if (cf) {
      j["closed_form"] = to_json(*cf);
      j["closed_form_max_error"] = max_sorted_gap(cf->values(), d.values);
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  if (out.format == "csv") {
    std::cout << "value,multiplicity,main,closed_form\n";
    for (std::size_t i = 0; i < mains.size(); ++i) {
      const EigDescriptor* cd = cf ? match_descriptor(*cf, mains[i].value) : nullptr;
      std::cout << csv_num(mains[i].value) << ',' << mains[i].multiplicity << ','
                << (mains[i].is_main ? "yes" : "no") << ','
                << (cd ? describe(*cd) : "") << '\n';
    }
    return kExitOk;
  }
  std::cout << "hypergraph " << label << ", order " << h.order() << ", "
            << out.matrix << " matrix\n";
  std::cout << std::left << std::setw(20) << "value" << std::setw(6) << "mult"
            << std::setw(6) << "main" << (cf ? "closed form" : "") << '\n';
  for (const auto& g : mains) {
    const EigDescriptor* cd = cf ? match_descriptor(*cf, g.value) : nullptr;
    std::cout << std::left << std::setw(20) << txt_num(g.value) << std::setw(6)
              << g.multiplicity << std::setw(6) << (g.is_main ? "yes" : "no")
              << (cd ? describe(*cd) : "") << '\n';
  }
  std::cout << "energy " << txt_num(energy) << '\n';
  if (cf)
    std::cout << "closed form max deviation "
              << max_sorted_gap(cf->values(), d.values) << '\n';
  return kExitOk;
}

int cmd_energy(const InputOptions& in, const OutputOptions& out) {
  check_format(out.format);
  const auto [label, h] = load_single(in);
  const auto m = select_matrix(h, out.matrix);
  maybe_dump(out, m);
  const double numeric = energy_of(eigenvalues(m));
  std::optional<double> closed;
  std::string closed_text;
  if (const auto cf = attached_closed_form(h, out.matrix == "seidel")) {
    closed = cf->energy();
    const auto& f = *h.family();
    if (out.matrix == "seidel" && f.name == "hyperstar") {
      const auto e = hyperstar_seidel_energy_exact(f.params[0], f.params[1]);
      closed = e.value();
      closed_text = to_string(e.integer_part) + "+√" + to_string(e.radicand);
    }
  }
  if (out.format == "json") {
    json j{{"hypergraph", label}, {"matrix", out.matrix}, {"energy", numeric}};
    if (closed) j["closed_form_energy"] = *closed;
    if (!closed_text.empty()) j["closed_form_text"] = closed_text;
    std::cout << j.dump(2) << '\n';
  } else if (out.format == "csv") {
    std::cout << "hypergraph,matrix,energy,closed_form_energy\n"
              << label << ',' << out.matrix << ',' << csv_num(numeric) << ','
              << (closed ? csv_num(*closed) : "") << '\n';
  } else {
    std::cout << out.matrix << " energy of " << label << ": " << txt_num(numeric)
              << '\n';
    if (closed)
      std::cout << "closed form: " << txt_num(*closed)
                << (closed_text.empty() ? "" : " = " + closed_text) << '\n';
  }
  return kExitOk;
}

Partition choose_partition(const Hypergraph& h, const std::string& which) {
  if (which == "twins") return twin_classes(h);
  if (which == "canonical") {
    if (auto p = canonical_partition(h)) return *p;
    throw UsageError("no canonical partition for this input; use --partition twins");
  }
  if (which == "auto") {
    if (auto p = canonical_partition(h); p && p->order() == h.order()) return *p;
    return twin_classes(h);
  }
  throw UsageError("--partition must be auto, canonical or twins");
}

int cmd_quotient(const InputOptions& in, const OutputOptions& out,
                 const std::string& partition) {
  check_format(out.format);
  const auto [label, h] = load_single(in);
  const auto m = select_matrix(h, out.matrix);
  maybe_dump(out, m);
  const auto p = choose_partition(h, partition);
  const auto qr = quotient_matrix(m, p);
  const auto values = eigenvalues(m);
  std::vector<double> qvals;
  bool contained = false;
  if (qr.equitable) {
    qvals = quotient_eigenvalues(qr);
    contained = spectrum_containment(qr, values, 1e-8);
  }
  if (out.format == "json") {
    json j = to_json(qr);
    j["hypergraph"] = label;
    j["matrix"] = out.matrix;
    j["eigenvalues"] = qvals;
    j["contained"] = contained;
    std::cout << j.dump(2) << '\n';
  } else if (out.format == "csv") {
    for (std::size_t i = 0; i < qr.q.rows(); ++i)
      for (std::size_t jj = 0; jj < qr.q.cols(); ++jj)
        std::cout << csv_num(qr.q(i, jj))
                  << (jj + 1 == qr.q.cols() ? "\n" : ",");
  } else {
    std::cout << "quotient of " << out.matrix << " matrix of " << label << " ("
              << p.size() << " blocks, sizes";
    for (auto s : qr.block_sizes) std::cout << ' ' << s;
    std::cout << ")\n";
    for (std::size_t i = 0; i < qr.q.rows(); ++i) {
      for (std::size_t jj = 0; jj < qr.q.cols(); ++jj)
        std::cout << std::right << std::setw(10) << txt_num(qr.q(i, jj));
      std::cout << '\n';
    }
    std::cout << "equitable: " << (qr.equitable ? "yes" : "no") << '\n';
    if (qr.witness)
      std::cout << "witness: block (" << qr.witness->block_i << ","
                << qr.witness->block_j << ") rows " << qr.witness->row_a
                << " and " << qr.witness->row_b << " sum to "
                << qr.witness->sum_a << " and " << qr.witness->sum_b << '\n';
    if (qr.equitable) {
      std::cout << "quotient eigenvalues:";
      for (double v : qvals) std::cout << ' ' << txt_num(v);
      std::cout << "\ncontained in parent spectrum: "
                << (contained ? "yes" : "no") << '\n';
    }
  }
  return qr.equitable ? kExitOk : kExitFail;
}

int cmd_walks(const InputOptions& in, const OutputOptions& out,
              std::size_t max_length) {
  check_format(out.format);
  const auto [label, h] = load_single(in);
  const auto table = walk_table(h, max_length);
  const auto rep = validate(h);
  const auto wg = walk_gen_from_spectrum(eigen_symmetric(adjacency_matrix(h)));
  const bool regular = rep.uniform_k && rep.regular_r;
  json rows = json::array();
  bool formula_ok = true;
  for (std::size_t l = 0; l <= max_length; ++l) {
    json row{{"length", l},
             {"count", to_string(table.counts[l])},
             {"spectral", wg.walks(l)}};
    if (regular) {
      const auto f = regular_walk_count(
          static_cast<long>(h.order()), static_cast<long>(*rep.uniform_k),
          static_cast<long>(*rep.regular_r), static_cast<unsigned>(l));
      row["regular_formula"] = to_string(f);
      formula_ok = formula_ok && f == table.counts[l];
    }
    rows.push_back(row);
  }
  if (out.format == "json") {
    std::cout << json{{"hypergraph", label}, {"walks", rows}}.dump(2) << '\n';
  } else {
    const char* sep = out.format == "csv" ? "," : "  ";
    std::cout << "length" << sep << "count" << sep << "spectral"
              << (regular ? std::string(sep) + "regular_formula" : "") << '\n';
    for (const auto& r : rows) {
      std::cout << r["length"].get<std::size_t>() << sep
                << r["count"].get<std::string>() << sep
                << csv_num(r["spectral"].get<double>());
      if (regular) std::cout << sep << r["regular_formula"].get<std::string>();
      std::cout << '\n';
    }
  }
  return formula_ok ? kExitOk : kExitFail;
}

int cmd_main_eigs(const InputOptions& in, const OutputOptions& out) {
  check_format(out.format);
  const auto [label, h] = load_single(in);
  const auto m = select_matrix(h, out.matrix);
  maybe_dump(out, m);
  const auto mains = main_eigenvalues(m.to_real(), out.tol_main, out.tol_group);
  const std::size_t rank = main_count_via_rank(m);
  const std::size_t count = count_main(mains);
  if (out.format == "json") {
    json j{{"hypergraph", label},
           {"matrix", out.matrix},
           {"eigenvalues", to_json(mains)},
           {"main_count", count},
           {"krylov_rank", rank}};
    std::cout << j.dump(2) << '\n';
  } else {
    const bool csv = out.format == "csv";
    if (csv) std::cout << "value,multiplicity,projection,main\n";
    for (const auto& e : mains) {
      if (!e.is_main && !csv) continue;
      if (csv)
        std::cout << csv_num(e.value) << ',' << e.multiplicity << ','
                  << csv_num(e.projection) << ',' << (e.is_main ? "yes" : "no")
                  << '\n';
      else
        std::cout << "main " << txt_num(e.value) << " (multiplicity "
                  << e.multiplicity << ", projection " << txt_num(e.projection)
                  << ")\n";
    }
    if (!csv)
      std::cout << "main count " << count << ", Krylov rank " << rank << '\n';
  }
  return count == rank ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string checks = "all";
  std::uint64_t seed = 20240601;
  std::size_t samples = 20;
  std::optional<double> tol_verify;
};

const std::vector<std::string> kAllChecks = {
    "identity", "regular-identity", "multiplicity", "quotient", "interlacing",
    "energy",   "walks",            "closed-form",  "main"};

std::vector<std::string> parse_checks(const std::string& text) {
  if (text == "all") return kAllChecks;
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string c;
  while (std::getline(ss, c, ',')) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
      throw UsageError("unknown check '" + c + "'");
    out.push_back(c);
  }
  if (out.empty()) throw UsageError("--checks must not be empty");
  return out;
}

// Result of one check on one hypergraph; status is pass, fail or skipped.
json run_check(const std::string& check, const Labeled& item,
               const VerifyOptions& vo) {
  const Hypergraph& h = item.h;
  auto tol = [&](double dflt) { return vo.tol_verify.value_or(dflt); };
  json r{{"hypergraph", item.label}, {"check", check}};
  auto status = [&](bool ok) { r["status"] = ok ? "pass" : "fail"; };
  const auto rep = validate(h);

  if (check == "identity") {
    const auto ir = verify_char_poly_identity(
        h, sample_points(vo.seed, vo.samples, -10.0, 10.0));
    r.update(to_json(ir, item.label));
    status(ir.max_rel_error < tol(1e-6));
  } else if (check == "regular-identity") {
    if (!rep.uniform_k || !rep.regular_r) {
      r["status"] = "skipped";
      r["reason"] = "not uniform and regular";
      return r;
    }
    const auto ir = verify_regular_identity(
        h, h.order(), *rep.uniform_k, *rep.regular_r,
        sample_points(vo.seed, vo.samples, -10.0, 10.0));
    r.update(to_json(ir, item.label));
    status(ir.max_rel_error < tol(1e-6));
  } else if (check == "multiplicity") {
    const auto tr = verify_multiplicity_transfer(h, kDefaultGroupTol);
    r.update(to_json(tr, item.label));
    status(tr.violations == 0);
  } else if (check == "quotient") {
    const auto p = choose_partition(h, "auto");
    bool ok = true;
    json per = json::object();
    for (const std::string which : {"adjacency", "seidel"}) {
      const auto m = select_matrix(h, which);
      const auto qr = quotient_matrix(m, p);
      const bool contained =
          qr.equitable && spectrum_containment(qr, eigenvalues(m), tol(1e-8));
      per[which] = {{"equitable", qr.equitable}, {"contained", contained}};
      ok = ok && qr.equitable && contained;
    }
    r["blocks"] = p.size();
    r["matrices"] = per;
    status(ok);
  } else if (check == "interlacing") {
    const auto parent = eigenvalues(seidel_matrix(h));
    const double se = energy_of(parent);
    std::size_t violations = 0;
    for (Vertex v = 0; v < h.order(); ++v) {
      const auto child = eigenvalues(seidel_matrix(delete_vertex(h, v)));
      if (!check_interlacing(parent, child, 1e-9) ||
          se < energy_of(child) - tol(1e-9))
        ++violations;
    }
    r["violations"] = violations;
    r["vertices"] = h.order();
    status(violations == 0);
  } else if (check == "energy") {
    const auto cf = attached_closed_form(h, true);
    if (!cf) {
      r["status"] = "skipped";
      r["reason"] = "no closed form";
      return r;
    }
    const double numeric = seidel_energy(h);
    double closed = cf->energy();
    const auto& f = *h.family();
    if (f.name == "hyperstar")
      closed = hyperstar_seidel_energy(f.params[0], f.params[1]);
    r["energy"] = numeric;
    r["closed_form_energy"] = closed;
    status(std::abs(numeric - closed) <= tol(1e-9));
  } else if (check == "walks") {
    constexpr std::size_t kMaxLength = 6;
    const auto table = walk_table(h, kMaxLength);
    const auto wg = walk_gen_from_spectrum(eigen_symmetric(adjacency_matrix(h)));
    double worst = 0.0;
    bool exact_ok = true;
    for (std::size_t l = 0; l <= kMaxLength; ++l) {
      const double n_l = table.counts[l].convert_to<double>();
      const double gap = std::abs(wg.walks(l) - n_l);
      worst = std::max(worst, n_l > 0 ? gap / n_l : gap);
      if (rep.uniform_k && rep.regular_r)
        exact_ok = exact_ok &&
                   regular_walk_count(static_cast<long>(h.order()),
                                      static_cast<long>(*rep.uniform_k),
                                      static_cast<long>(*rep.regular_r),
                                      static_cast<unsigned>(l)) ==
                       table.counts[l];
    }
    r["max_rel_error"] = worst;
    r["regular_formula_checked"] = rep.uniform_k && rep.regular_r;
    r["regular_formula_exact"] = exact_ok;
    status(exact_ok && worst <= tol(1e-6));
  } else if (check == "closed-form") {
    const auto ca = attached_closed_form(h, false);
    const auto cs = attached_closed_form(h, true);
    if (!ca || !cs) {
      r["status"] = "skipped";
      r["reason"] = "no closed form";
      return r;
    }
    const double ga = max_sorted_gap(ca->values(), eigenvalues(adjacency_matrix(h)));
    const double gs = max_sorted_gap(cs->values(), eigenvalues(seidel_matrix(h)));
    r["adjacency_max_error"] = ga;
    r["seidel_max_error"] = gs;
    status(ga <= tol(1e-8) && gs <= tol(1e-8));
  } else if (check == "main") {
    const auto s = seidel_matrix(h);
    const auto mains = main_eigenvalues(s);
    const std::size_t count = count_main(mains), rank = main_count_via_rank(s);
    r["main_count"] = count;
    r["krylov_rank"] = rank;
    bool ok = count == rank;
    const auto& f = h.family();
    if (f && f->name == "hyperstar" && attached_closed_form(h, true)) {
      const auto [r1, r2] = hyperstar_main_seidel(f->params[0], f->params[1]);
      std::vector<double> flagged;
      for (const auto& m : mains)
        if (m.is_main) flagged.push_back(m.value);
      ok = ok && flagged.size() == 2 &&
           max_sorted_gap(flagged, {surd_value(r1), surd_value(r2)}) <= 1e-8;
    }
    status(ok);
  }
  return r;
}

int cmd_verify(const InputOptions& in, const VerifyOptions& vo,
               const std::string& format) {
  check_format(format);
  if (vo.tol_verify && !(*vo.tol_verify > 0))
    throw UsageError("--tol-verify must be > 0");
  const auto checks = parse_checks(vo.checks);
  const auto items = load_inputs(in);
  json results = json::array();
  std::size_t failures = 0;
  for (const auto& item : items)
    for (const auto& c : checks) {
      auto r = run_check(c, item, vo);
      if (r["status"] == "fail") ++failures;
      results.push_back(std::move(r));
    }
  const bool ok = failures == 0;
  if (format == "json") {
    std::cout << json{{"passed", ok}, {"failures", failures}, {"results", results}}
                     .dump(2)
              << '\n';
  } else {
    const bool csv = format == "csv";
    if (csv) std::cout << "hypergraph,check,status\n";
    for (const auto& r : results)
      std::cout << r["hypergraph"].get<std::string>() << (csv ? "," : "  ")
                << r["check"].get<std::string>() << (csv ? "," : "  ")
                << r["status"].get<std::string>() << '\n';
    if (!csv)
      std::cout << (ok ? "all checks passed" : std::to_string(failures) +
                                                   " check(s) failed")
                << '\n';
  }
  return ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// Wiring

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input,--input", in.input, "Input .hg file or matrix dump");
  cmd->add_option("--input-format", in.input_format,
                  "auto, hg, dump, adjacency-dump or seidel-dump");
  cmd->add_option("--family", in.family,
                  "hyperstar, double-hyperstar, sunflower or complete");
  cmd->add_option("--n", in.n, "n values, e.g. 4 or 3..8");
  cmd->add_option("--k", in.k, "k values");
  cmd->add_option("--n1", in.n1, "n1 values");
  cmd->add_option("--n2", in.n2, "n2 values");
  cmd->add_option("--r", in.r, "r values (complete family)");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "text, json or csv");
  cmd->add_option("--matrix", out.matrix, "adjacency or seidel");
  cmd->add_option("--tol-group", out.tol_group, "Eigenvalue grouping tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-main", out.tol_main, "Main-eigenvalue threshold")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dump-matrix", out.dump_matrix,
                  "Write the selected matrix as a dump file");
}

int run(int argc, char** argv) {
  CLI::App app{"Spectral analysis of hypergraphs: adjacency and Seidel spectra, "
               "closed forms and structural checks"};
  app.require_subcommand(1);

  InputOptions in;
  OutputOptions out;
  VerifyOptions vo;
  std::string gen_family, gen_out, partition = "auto";
  std::vector<std::string> gen_args;
  std::size_t max_length = 6;
  double tol_verify = 0.0;

  auto* gen = app.add_subcommand("gen", "Generate a family member as .hg");
  gen->add_option("family", gen_family, "Family name")->required();
  gen->add_option("params", gen_args, "Family parameters");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto* spectrum = app.add_subcommand("spectrum", "Grouped spectrum, energy, main flags");
  auto* energy = app.add_subcommand("energy", "Matrix energy");
  auto* quotient = app.add_subcommand("quotient", "Quotient matrix of a partition");
  auto* walks = app.add_subcommand("walks", "Exact walk counts");
  auto* main_eigs = app.add_subcommand("main-eigs", "Main eigenvalues");
  auto* verify = app.add_subcommand("verify", "Run verifiers");
  for (auto* c : {spectrum, energy, quotient, walks, main_eigs, verify})
    add_input_options(c, in);
  for (auto* c : {spectrum, energy, quotient, main_eigs}) add_output_options(c, out);
  walks->add_option("--format", out.format, "text, json or csv");
  walks->add_option("--max-length", max_length, "Largest walk length");
  quotient->add_option("--partition", partition, "auto, canonical or twins");
  verify->add_option("--checks", vo.checks,
                     "Comma-separated checks or 'all': identity, "
                     "regular-identity, multiplicity, quotient, interlacing, "
                     "energy, walks, closed-form, main");
  verify->add_option("--seed", vo.seed, "Seed for identity sample points");
  verify->add_option("--samples", vo.samples, "Number of sample points");
  verify->add_option("--tol-verify", tol_verify,
                     "Override every check's tolerance");
  verify->add_option("--format", out.format, "json (default), text or csv");

  try {
    const bool verify_format_given = [&] {
      for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]).rfind("--format", 0) == 0) return true;
      return false;
    }();
    app.parse(argc, argv);
    if (verify->parsed() && !verify_format_given) out.format = "json";
    if (verify->count("--tol-verify")) vo.tol_verify = tol_verify;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_family, gen_args, gen_out);
    if (spectrum->parsed()) return cmd_spectrum(in, out);
    if (energy->parsed()) return cmd_energy(in, out);
    if (quotient->parsed()) return cmd_quotient(in, out, partition);
    if (walks->parsed()) return cmd_walks(in, out, max_length);
    if (main_eigs->parsed()) return cmd_main_eigs(in, out);
    if (verify->parsed()) return cmd_verify(in, vo, out.format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
