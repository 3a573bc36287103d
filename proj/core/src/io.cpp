// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

bool parse_i64(const std::string& s, std::int64_t& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) fail(Errc::ParseError, path + " is empty");
  return lines;
}

}  // namespace

std::vector<std::vector<std::int64_t>> read_int_csv(const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t width = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<std::string> cells = split(lines[li], ',');
    std::vector<std::int64_t> row;
    row.reserve(cells.size());
    bool ok = true;
    for (const auto& c : cells) {
      std::int64_t v;
      if (!parse_i64(c, v)) {
        ok = false;
        break;
      }
      row.push_back(v);
    }
    if (!ok) {
      if (li == 0) continue;  // header line
      fail(Errc::ParseError, path + ": line " + std::to_string(li + 1) + " is not numeric");
    }
    if (width == 0) width = row.size();
    if (row.size() != width)
      fail(Errc::RaggedInput, path + ": line " + std::to_string(li + 1) + " has " +
                                  std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(width));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::ParseError, path + " holds no numeric rows");
  return rows;
}

TimeSeries read_series_csv(const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  TimeSeries series;
  std::size_t width = 0;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<std::string> cells = split(lines[li], ',');
    std::vector<double> row;
    row.reserve(cells.size());
    bool ok = true;
    for (const auto& c : cells) {
      double v;
      if (!parse_double(c, v)) {
        ok = false;
        break;
      }
      row.push_back(v);
    }
    if (!ok) {
      if (li == 0) {
        for (const auto& c : cells) series.labels.push_back(trim(c));
        continue;
      }
      fail(Errc::ParseError, path + ": line " + std::to_string(li + 1) + " is not numeric");
    }
    if (width == 0) width = row.size();
    if (row.size() != width)
      fail(Errc::RaggedInput, path + ": line " + std::to_string(li + 1) + " has " +
                                  std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(width));
    series.samples.push_back(std::move(row));
  }
  if (series.samples.empty()) fail(Errc::ParseError, path + " holds no numeric rows");
  return series;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& cell : split(text, ',')) {
    std::int64_t v;
    if (!parse_i64(cell, v)) fail(Errc::ParseError, "'" + cell + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

namespace {

std::vector<int> parse_variable_chain(const std::string& body, int nvars,
                                      const std::string& full) {
  std::vector<int> priority;
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  for (const auto& tok : split(body, '>')) {
    std::string t = trim(tok);
    if (t.size() < 2 || (t[0] != 'x' && t[0] != 'y'))
      fail(Errc::ParseError, "expected variable in order spec '" + full + "'");
    std::int64_t idx;
    if (!parse_i64(t.substr(1), idx) || idx < 1 || idx > nvars)
      fail(Errc::ParseError, "variable '" + t + "' outside x1..x" + std::to_string(nvars));
    if (seen[static_cast<std::size_t>(idx - 1)])
      fail(Errc::ParseError, "variable '" + t + "' repeated in order spec");
    seen[static_cast<std::size_t>(idx - 1)] = true;
    priority.push_back(static_cast<int>(idx - 1));
  }
  if (priority.empty()) fail(Errc::ParseError, "empty variable list in order spec '" + full + "'");
  return priority;
}

std::vector<int> full_priority(int nvars) {
  std::vector<int> pr(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) pr[static_cast<std::size_t>(i)] = i;
  return pr;
}

}  // namespace

namespace {

MonomialOrder parse_order_spec_impl(const std::string& spec, int nvars);

void collect_priority(const MonomialOrder& order, std::vector<bool>& seen) {
  if (order.kind() == OrderKind::Block) {
    collect_priority(order.block_first(), seen);
    collect_priority(order.block_second(), seen);
    return;
  }
  for (int v : order.priority()) {
    if (seen[static_cast<std::size_t>(v)])
      fail(Errc::ParseError, "variable x" + std::to_string(v + 1) + " appears in both blocks");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

MonomialOrder parse_order_spec(const std::string& spec, int nvars) {
  MonomialOrder order = parse_order_spec_impl(spec, nvars);
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  collect_priority(order, seen);
  for (int v = 0; v < nvars; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      fail(Errc::ParseError,
           "order spec '" + spec + "' does not mention x" + std::to_string(v + 1));
  return order;
}

namespace {

MonomialOrder parse_order_spec_impl(const std::string& spec, int nvars) {
  const std::string s = trim(spec);
  if (s == "lex") return MonomialOrder::lex(full_priority(nvars));
  if (s == "degrevlex") return MonomialOrder::degrevlex(full_priority(nvars));
  if (s.rfind("lex:", 0) == 0)
    return MonomialOrder::lex(parse_variable_chain(s.substr(4), nvars, spec));
  if (s.rfind("degrevlex:", 0) == 0)
    return MonomialOrder::degrevlex(parse_variable_chain(s.substr(10), nvars, spec));
  if (s.rfind("block:", 0) == 0) {
    // block:(<spec1>);(<spec2>)
    std::string body = trim(s.substr(6));
    if (body.empty() || body.front() != '(')
      fail(Errc::ParseError, "expected '(' after block: in '" + spec + "'");
    int depth = 0;
    std::size_t end1 = std::string::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')' && --depth == 0) {
        end1 = i;
        break;
      }
    }
    if (end1 == std::string::npos)
      fail(Errc::ParseError, "unbalanced parentheses in '" + spec + "'");
    std::string first = trim(body.substr(1, end1 - 1));
    std::string rest = trim(body.substr(end1 + 1));
    if (rest.empty() || rest.front() != ';')
      fail(Errc::ParseError, "expected ');(' between block parts in '" + spec + "'");
    rest = trim(rest.substr(1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      fail(Errc::ParseError, "block parts must be parenthesized in '" + spec + "'");
    std::string second = trim(rest.substr(1, rest.size() - 2));
    return MonomialOrder::block(parse_order_spec_impl(first, nvars),
                                parse_order_spec_impl(second, nvars));
  }
  fail(Errc::ParseError, "unrecognized order spec '" + spec + "'");
}

}  // namespace

namespace {

ordered_json matrix_to_json(const FpMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json partition_to_json(const Partition& p) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : p.classes()) {
    ordered_json c = ordered_json::array();
    for (int i : cls) c.push_back(i + 1);
    classes.push_back(std::move(c));
  }
  return classes;
}

ordered_json values_to_json(const std::vector<Fp>& v) {
  ordered_json out = ordered_json::array();
  for (Fp x : v) out.push_back(x.value());
  return out;
}

std::string dump(const ordered_json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

ordered_json basis_to_json_object(const Basis& basis) {
  ordered_json j;
  j["kind"] = basis_kind_name(basis.kind);
  j["prime"] = basis.modulus();
  j["m"] = basis.size();
  j["nvars"] = basis.nvars();
  ordered_json elems = ordered_json::array();
  for (const auto& e : basis.elements) elems.push_back(e.to_string());
  j["elements"] = std::move(elems);
  j["bp"] = matrix_to_json(basis.bp);
  j["bp_inv"] = matrix_to_json(basis.bp_inv);

  ordered_json prov;
  if (!basis.provenance.witness_coords.empty())
    prov["witness_coords"] = basis.provenance.witness_coords;
  if (basis.provenance.coefficients)
    prov["coefficients"] = values_to_json(*basis.provenance.coefficients);
  if (basis.provenance.generator) prov["generator"] = basis.provenance.generator->to_string();
  if (basis.provenance.point_values)
    prov["point_values"] = values_to_json(*basis.provenance.point_values);
  if (basis.provenance.univariate_generator)
    prov["univariate_generator"] = values_to_json(*basis.provenance.univariate_generator);
  if (!basis.provenance.separator_factors.empty()) {
    ordered_json seps = ordered_json::array();
    for (const auto& sf : basis.provenance.separator_factors) {
      ordered_json s;
      s["scale"] = sf.scale.value();
      ordered_json fs = ordered_json::array();
      for (const auto& f : sf.factors) {
        ordered_json fo;
        fo["variable"] = f.coordinate + 1;
        fo["root"] = f.root.value();
        fo["multiplicity"] = f.multiplicity;
        fs.push_back(std::move(fo));
      }
      s["factors"] = std::move(fs);
      seps.push_back(std::move(s));
    }
    prov["separator_factors"] = std::move(seps);
  }
  if (basis.provenance.tau) {
    ordered_json t = ordered_json::array();
    for (int v : *basis.provenance.tau) t.push_back(v + 1);
    prov["tau"] = std::move(t);
  }
  if (basis.provenance.order_description)
    prov["order"] = *basis.provenance.order_description;
  prov["comparisons"] = basis.provenance.comparisons;
  j["provenance"] = std::move(prov);
  return j;
}

}  // namespace

std::string preprocess_report_json(const WitnessData& sigma, const PointTrieResult& trie,
                                   const SortedSigmaResult& sorted, bool pretty) {
  ordered_json j;
  j["m"] = sigma.m;
  j["n"] = sigma.n;
  j["m_bar"] = sigma.distinct_count;
  j["r"] = sigma.branching;
  j["witness_list"] = sigma.witness_list;
  ordered_json levels = ordered_json::array();
  for (int l = 0; l <= sigma.n; ++l) levels.push_back(partition_to_json(sigma.sigma_at(l)));
  j["sigma"] = std::move(levels);
  j["stop_level"] = sigma.stop_level;
  j["witness_matrix_upper"] = sigma.matrix.upper_triangle_row_major();
  ordered_json cmp;
  cmp["sigma"] = sigma.comparisons;
  cmp["point_trie"] = trie.comparisons;
  cmp["sorted_sort"] = sorted.sort_comparisons;
  cmp["sorted_scan"] = sorted.scan_comparisons;
  j["comparisons"] = std::move(cmp);
  return dump(j, pretty);
}

std::string basis_json(const Basis& basis, bool pretty) {
  return dump(basis_to_json_object(basis), pretty);
}

std::string normal_form_json(const NormalFormResult& nf, const MonomialOrder* order,
                             bool pretty) {
  ordered_json j;
  j["coefficients"] = values_to_json(nf.coefficients);
  j["polynomial"] = nf.polynomial.to_string(order);
  return dump(j, pretty);
}

std::string groebner_json(const GroebnerResult& result, bool pretty) {
  ordered_json j;
  j["order"] = result.order.to_string();
  ordered_json basis = ordered_json::array();
  for (const auto& g : result.groebner) basis.push_back(g.to_string(&result.order));
  j["groebner"] = std::move(basis);
  ordered_json standard = ordered_json::array();
  for (const auto& mono : result.standard_monomials) standard.push_back(mono.to_string());
  j["standard"] = std::move(standard);
  return dump(j, pretty);
}

std::string grn_json(const GRNModel& model, bool counters, bool pretty) {
  ordered_json j;
  j["prime"] = model.prime;
  j["m_transitions"] = static_cast<int>(model.kept_samples.size());
  j["nvars"] = model.domain.dimension();
  ordered_json dups = ordered_json::array();
  for (auto [a, b] : model.duplicate_pairs) dups.push_back(ordered_json::array({a, b}));
  j["duplicate_samples"] = std::move(dups);
  j["kept_samples"] = model.kept_samples;
  j["basis"] = basis_to_json_object(model.basis);
  ordered_json hs = ordered_json::array();
  for (const auto& h : model.transitions) {
    ordered_json o;
    o["coefficients"] = values_to_json(h.coefficients);
    o["polynomial"] = h.polynomial.to_string();
    hs.push_back(std::move(o));
  }
  j["transitions"] = std::move(hs);
  if (counters) {
    ordered_json c;
    c["comparisons"] = model.counters.comparisons;
    c["ops_core"] = model.counters.ops_core;
    c["ops_model"] = model.counters.ops_model;
    j["counters"] = std::move(c);
  }
  return dump(j, pretty);
}

Basis basis_from_json(const std::string& text, const PrimeField& field, int nvars) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("basis JSON: ") + e.what());
  }
  try {
    Basis b;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "separator") b.kind = BasisKind::Separator;
    else if (kind == "linear_power") b.kind = BasisKind::LinearPower;
    else if (kind == "separator_map_power") b.kind = BasisKind::SeparatorMapPower;
    else if (kind == "lex_monomial") b.kind = BasisKind::LexMonomial;
    else if (kind == "elim_monomial") b.kind = BasisKind::ElimMonomial;
    else fail(Errc::ParseError, "unknown basis kind '" + kind + "'");

    if (j.at("prime").get<std::uint64_t>() != field.modulus())
      fail(Errc::FieldMismatch, "basis file prime differs from --prime");
    if (j.at("nvars").get<int>() != nvars)
      fail(Errc::DimensionMismatch, "basis file variable count differs from the points");

    for (const auto& e : j.at("elements"))
      b.elements.push_back(parse_polynomial(e.get<std::string>(), nvars, field));
    const int m = static_cast<int>(b.elements.size());

    auto read_matrix = [&](const ordered_json& rows) {
      FpMatrix mat(rows.size(), rows.empty() ? 0 : rows[0].size(), field.modulus());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
          mat.at(i, k) = field.element(rows[i][k].get<std::int64_t>());
      return mat;
    };
    b.bp = read_matrix(j.at("bp"));
    b.bp_inv = read_matrix(j.at("bp_inv"));
    if (b.bp.rows() != static_cast<std::size_t>(m) || b.bp.cols() != static_cast<std::size_t>(m) ||
        b.bp_inv.rows() != static_cast<std::size_t>(m) ||
        b.bp_inv.cols() != static_cast<std::size_t>(m))
      fail(Errc::ParseError, "basis matrices must be m x m");
    if (b.bp * b.bp_inv != FpMatrix::identity(static_cast<std::size_t>(m), field.modulus()))
      fail(Errc::Singular, "bp * bp_inv is not the identity in the basis file");
    return b;
  } catch (const ordered_json::exception& e) {
    fail(Errc::ParseError, std::string("basis JSON: ") + e.what());
  }
}

}  // namespace qb
