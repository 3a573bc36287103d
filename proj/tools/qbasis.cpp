// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// qbasis: exact quotient-ring bases for vanishing ideals of finite point
// sets over prime fields, with normal forms, Groebner bases and a reverse
// engineering pipeline for discrete dynamical models.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qbasis/bases.hpp"
#include "qbasis/bm.hpp"
#include "qbasis/grn.hpp"
#include "qbasis/io.hpp"
#include "qbasis/normalform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) qb::fail(qb::Errc::ParseError, "cannot write " + path);
    out << text;
  }
};

qb::Basis build_basis_from_flags(const qb::PointSet& points, const std::string& construction,
                                 const std::string& values, const std::string& tau_text,
                                 const std::string& order2, bool randomized, std::uint64_t seed,
                                 bool force) {
  if (construction == "sep") return qb::separator_basis(points);
  if (construction == "linear") {
    if (randomized) {
      qb::RealizationDraw draw = qb::randomized_realization(points, seed);
      return qb::linear_power_basis_from(points, draw.coordinates, draw.coefficients);
    }
    return qb::linear_power_basis(points, force);
  }
  if (construction == "sepmap") {
    std::vector<qb::Fp> vals;
    if (!values.empty()) {
      for (std::int64_t v : qb::parse_int_list(values)) vals.push_back(points.field().element(v));
    } else {
      for (int i = 0; i < points.count(); ++i) vals.push_back(points.field().element(i));
    }
    return qb::separator_map_basis(points, vals);
  }
  if (construction == "lex") return qb::lex_monomial_basis(points);
  if (construction == "elim") {
    std::vector<int> tau;
    if (!tau_text.empty()) {
      for (std::int64_t v : qb::parse_int_list(tau_text)) {
        if (v < 1 || v > points.dimension())
          qb::fail(qb::Errc::ParseError, "--tau entries must lie in 1.." +
                                             std::to_string(points.dimension()));
        tau.push_back(static_cast<int>(v) - 1);
      }
    } else {
      for (int i = 0; i < points.dimension(); ++i) tau.push_back(i);
    }
    qb::OrderKind kind;
    if (order2 == "lex") kind = qb::OrderKind::Lex;
    else if (order2 == "degrevlex" || order2.empty()) kind = qb::OrderKind::DegRevLex;
    else qb::fail(qb::Errc::ParseError, "--order2 must be lex or degrevlex");
    return qb::elimination_standard_monomials(points, tau, kind).basis;
  }
  qb::fail(qb::Errc::ParseError, "unknown construction '" + construction + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quotient-ring bases for finite point sets over prime fields"};
  app.require_subcommand(1);

  std::string points_path, series_path, out_path, construction = "lex";
  std::string poly_text, order_spec, order2, values_text, tau_text, basis_file;
  std::uint64_t prime = 0, seed = 12345;
  bool pretty = true, counters = false, force = false, randomized = false, no_discretize = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path, "write the JSON report to a file");
    cmd->add_flag("--compact", [&pretty](std::int64_t) { pretty = false; },
                  "emit compact JSON on one line");
  };

  CLI::App* prep = app.add_subcommand(
      "preprocess", "coordinate-wise partitions, witness list/matrix, point trie, counters");
  prep->add_option("points", points_path, "CSV of integer tuples, one per row")->required();
  add_output(prep);

  CLI::App* basis = app.add_subcommand("basis", "construct a quotient-ring basis");
  basis->add_option("points", points_path, "CSV of points, one per row")->required();
  basis->add_option("-p,--prime", prime, "field modulus")->required();
  basis->add_option("-c,--construction", construction, "sep | linear | sepmap | lex | elim");
  basis->add_option("--values", values_text, "sepmap: comma-separated map values");
  basis->add_option("--tau", tau_text, "elim: coordinate permutation, 1-based image list");
  basis->add_option("--order2", order2, "elim: lex | degrevlex on the witness variables");
  basis->add_flag("--randomized", randomized, "linear: draw random coefficients");
  basis->add_option("--seed", seed, "seed for --randomized");
  basis->add_flag("--force", force, "attempt the construction below the field-size bound");
  add_output(basis);

  CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
  nf->add_option("points", points_path, "CSV of points, one per row")->required();
  nf->add_option("-p,--prime", prime, "field modulus")->required();
  nf->add_option("--poly", poly_text, "polynomial, e.g. x1*x2*x4+x4*x5*x6*x7")->required();
  nf->add_option("--basis", basis_file, "basis JSON produced by the basis subcommand");
  nf->add_option("-c,--construction", construction, "sep | linear | sepmap | lex | elim");
  nf->add_option("--values", values_text, "sepmap: comma-separated map values");
  nf->add_option("--tau", tau_text, "elim: coordinate permutation, 1-based image list");
  nf->add_option("--order2", order2, "elim: lex | degrevlex on the witness variables");
  nf->add_flag("--randomized", randomized, "linear: draw random coefficients");
  nf->add_option("--seed", seed, "seed for --randomized");
  nf->add_flag("--force", force, "attempt the construction below the field-size bound");
  add_output(nf);

  CLI::App* gb = app.add_subcommand("groebner", "reduced Groebner basis and standard monomials");
  gb->add_option("points", points_path, "CSV of points, one per row")->required();
  gb->add_option("-p,--prime", prime, "field modulus")->required();
  gb->add_option("--order", order_spec,
                 "lex | degrevlex | lex:x1>x2>... | degrevlex:... | block:(...);(...)");
  add_output(gb);

  CLI::App* rev = app.add_subcommand("reveng", "transition polynomials from a time series");
  rev->add_option("series", series_path, "CSV time series, one sample per row")->required();
  rev->add_option("-p,--prime", prime, "number of discrete states")->required();
  rev->add_flag("--no-discretize", no_discretize, "input is already discrete");
  rev->add_option("-b,--basis-kind", construction, "lex | sep | linear | sepmap | elim");
  rev->add_option("--values", values_text, "sepmap: comma-separated map values");
  rev->add_option("--tau", tau_text, "elim: coordinate permutation, 1-based image list");
  rev->add_option("--order2", order2, "elim: lex | degrevlex on the witness variables");
  rev->add_flag("--randomized", randomized, "linear: draw random coefficients");
  rev->add_option("--seed", seed, "seed for --randomized");
  rev->add_flag("--force", force, "attempt the construction below the field-size bound");
  rev->add_flag("--counters", counters, "include comparison/operation counters");
  add_output(rev);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Output out{out_path};
  try {
    if (prep->parsed()) {
      qb::TupleSet tuples(qb::read_int_csv(points_path));
      qb::WitnessData wd = qb::sigma_algorithm(tuples);
      qb::PointTrieResult trie = qb::build_point_trie(tuples);
      qb::SortedSigmaResult sorted = qb::sigma_algorithm_sorted(tuples);
      out.write(qb::preprocess_report_json(wd, trie, sorted, pretty));
      return kExitOk;
    }

    qb::PrimeField field(prime);
    if (gb->parsed()) {
      qb::PointSet points(field, qb::read_int_csv(points_path));
      qb::MonomialOrder order = order_spec.empty()
                                    ? qb::MonomialOrder::lex_standard(points.dimension())
                                    : qb::parse_order_spec(order_spec, points.dimension());
      out.write(qb::groebner_json(qb::buchberger_moller(points, order), pretty));
      return kExitOk;
    }
    if (basis->parsed()) {
      qb::PointSet points(field, qb::read_int_csv(points_path));
      qb::Basis b = build_basis_from_flags(points, construction, values_text, tau_text, order2,
                                           randomized, seed, force);
      out.write(qb::basis_json(b, pretty));
      return kExitOk;
    }
    if (nf->parsed()) {
      qb::PointSet points(field, qb::read_int_csv(points_path));
      qb::Basis b = [&] {
        if (!basis_file.empty()) {
          std::ifstream in(basis_file);
          if (!in) qb::fail(qb::Errc::ParseError, "cannot open " + basis_file);
          std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
          return qb::basis_from_json(text, field, points.dimension());
        }
        return build_basis_from_flags(points, construction, values_text, tau_text, order2,
                                      randomized, seed, force);
      }();
      qb::Polynomial f = qb::parse_polynomial(poly_text, points.dimension(), field);
      out.write(qb::normal_form_json(qb::normal_form(f, b, points), nullptr, pretty));
      return kExitOk;
    }
    if (rev->parsed()) {
      qb::TimeSeries series = qb::read_series_csv(series_path);
      qb::GrnOptions opt;
      if (construction == "lex") opt.basis = qb::BasisChoice::LexMonomial;
      else if (construction == "sep") opt.basis = qb::BasisChoice::Separator;
      else if (construction == "linear") opt.basis = qb::BasisChoice::LinearPower;
      else if (construction == "sepmap") opt.basis = qb::BasisChoice::SeparatorMap;
      else if (construction == "elim") opt.basis = qb::BasisChoice::ElimMonomial;
      else qb::fail(qb::Errc::ParseError, "unknown basis kind '" + construction + "'");
      if (!values_text.empty()) opt.map_values = qb::parse_int_list(values_text);
      if (!tau_text.empty()) {
        std::vector<int> tau;
        for (std::int64_t v : qb::parse_int_list(tau_text)) tau.push_back(static_cast<int>(v) - 1);
        opt.tau = tau;
      }
      if (order2 == "lex") opt.elim_order2 = qb::OrderKind::Lex;
      opt.randomized = randomized;
      opt.seed = seed;
      opt.force = force;
      qb::GRNModel model = qb::reverse_engineer(series, prime, opt, no_discretize);
      out.write(qb::grn_json(model, counters, pretty));
      return kExitOk;
    }
  } catch (const qb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInput : kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
