// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/bases.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "qbasis/bm.hpp"

namespace qb {

const char* basis_kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::Separator: return "separator";
    case BasisKind::LinearPower: return "linear_power";
    case BasisKind::SeparatorMapPower: return "separator_map_power";
    case BasisKind::LexMonomial: return "lex_monomial";
    case BasisKind::ElimMonomial: return "elim_monomial";
  }
  return "unknown";
}

Polynomial SeparatorFactored::expand(const PrimeField& field) const {
  Polynomial acc = Polynomial::constant(scale, nvars);
  for (const auto& f : factors) {
    Polynomial linear = Polynomial::variable(f.coordinate, nvars, field) -
                        Polynomial::constant(f.root, nvars);
    for (int k = 0; k < f.multiplicity; ++k) acc *= linear;
  }
  return acc;
}

WitnessData require_distinct(const PointSet& points) {
  WitnessData wd = sigma_algorithm(TupleSet(points.integer_rows()));
  if (wd.distinct_count != points.count())
    fail(Errc::DuplicatePoints, "points are not pairwise distinct (" +
                                    std::to_string(points.count() - wd.distinct_count) +
                                    " duplicates)");
  return wd;
}

namespace {

void verify_separator_property(const std::vector<Polynomial>& seps, const PointSet& points) {
  const std::uint64_t p = points.field().modulus();
  for (int i = 0; i < points.count(); ++i)
    for (int j = 0; j < points.count(); ++j) {
      Fp expected = Fp::from_raw(i == j ? 1 % p : 0, p);
      if (seps[static_cast<std::size_t>(i)].evaluate(points.row(j)) != expected)
        throw std::logic_error("separator property violated; construction bug");
    }
}

Basis power_basis(const PointSet& points, const Polynomial& generator, BasisKind kind,
                  BasisProvenance prov) {
  const int m = points.count();
  std::vector<Polynomial> elements;
  elements.reserve(static_cast<std::size_t>(m));
  Polynomial acc = Polynomial::constant(points.field().one(), points.dimension());
  for (int k = 0; k < m; ++k) {
    elements.push_back(acc);
    if (k + 1 < m) acc *= generator;
  }
  Basis b;
  b.kind = kind;
  b.elements = std::move(elements);
  b.bp = evaluate_matrix(b.elements, points);
  b.bp_inv = invert(b.bp);
  b.provenance = std::move(prov);
  return b;
}

std::vector<Fp> univariate_from_roots(const std::vector<Fp>& roots, const PrimeField& field) {
  std::vector<Fp> g{field.one()};  // coefficients, low to high
  for (Fp r : roots) {
    std::vector<Fp> next(g.size() + 1, field.zero());
    for (std::size_t k = 0; k < g.size(); ++k) {
      next[k + 1] += g[k];
      next[k] -= g[k] * r;
    }
    g = std::move(next);
  }
  return g;
}

}  // namespace

Basis separator_basis(const PointSet& points) {
  return separator_basis(points, require_distinct(points));
}

Basis separator_basis(const PointSet& points, const WitnessData& wd) {
  const int m = points.count();
  const int n = points.dimension();
  if (wd.distinct_count != m) fail(Errc::DuplicatePoints, "points are not pairwise distinct");
  const PrimeField& field = points.field();

  std::vector<SeparatorFactored> factored;
  factored.reserve(static_cast<std::size_t>(m));
  std::vector<Polynomial> elements;
  elements.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    SeparatorFactored sep;
    sep.nvars = n;
    Fp denom = field.one();
    std::map<std::pair<int, std::uint64_t>, int> mult;  // (coordinate, root) -> multiplicity
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const int c = wd.matrix.get(i, j);  // 1-based coordinate of first disagreement
      const Fp root = points.at(j, c - 1);
      denom *= points.at(i, c - 1) - root;
      ++mult[{c - 1, root.value()}];
    }
    sep.scale = denom.inv();
    for (const auto& [key, k] : mult)
      sep.factors.push_back({key.first, Fp::from_raw(key.second, field.modulus()), k});
    elements.push_back(sep.expand(field));
    factored.push_back(std::move(sep));
  }
  verify_separator_property(elements, points);

  Basis b;
  b.kind = BasisKind::Separator;
  b.elements = std::move(elements);
  b.bp = FpMatrix::identity(static_cast<std::size_t>(m), field.modulus());
  b.bp_inv = b.bp;
  b.provenance.witness_coords = wd.witness_list;
  b.provenance.separator_factors = std::move(factored);
  b.provenance.comparisons = wd.comparisons;
  return b;
}

Polynomial reduce_separator(const SeparatorFactored& factored, const std::vector<Fp>& point,
                            const PrimeField& field) {
  Polynomial prod = Polynomial::constant(field.one(), factored.nvars);
  Fp value = field.one();
  for (const auto& f : factored.factors) {
    prod *= Polynomial::variable(f.coordinate, factored.nvars, field) -
            Polynomial::constant(f.root, factored.nvars);
    value *= point[static_cast<std::size_t>(f.coordinate)] - f.root;
  }
  if (value.is_zero())
    fail(Errc::NotApplicable, "squarefree part vanishes at the separated point");
  return prod.scale(value.inv());
}

DistinctElementResult distinct_element_algorithm(const PointSet& points, bool force) {
  const int m = points.count();
  const std::uint64_t p = points.field().modulus();
  const std::uint64_t needed = static_cast<std::uint64_t>(m) * (m - 1) / 2 + 1;
  if (p < needed && !force)
    fail(Errc::FieldTooSmall, "need at least m(m-1)/2+1 = " + std::to_string(needed) +
                                  " field elements, have " + std::to_string(p));

  WitnessData wd = require_distinct(points);

  DistinctElementResult res;
  res.comparisons = wd.comparisons;
  OpDelta ops;

  if (m == 1) {
    // a single value is trivially distinct; use the first coordinate
    res.coordinates = {1};
    res.coefficients = {points.field().one()};
    res.realization = points.column(0);
    res.operations = ops.delta().total();
    return res;
  }

  res.coordinates = wd.witness_list;
  std::vector<Fp> v = points.column(res.coordinates[0] - 1);
  res.coefficients.push_back(points.field().one());
  Partition current = type_of([&] {
    Tuple t;
    for (Fp x : v) t.push_back(static_cast<std::int64_t>(x.value()));
    return t;
  }());

  for (std::size_t h = 1; h < res.coordinates.size(); ++h) {
    const int coord = res.coordinates[h];
    std::vector<Fp> u = points.column(coord - 1);
    Tuple ut;
    for (Fp x : u) ut.push_back(static_cast<std::int64_t>(x.value()));
    Partition utype = type_of(ut);

    DistinctElementStage stage;
    stage.coordinate = coord;
    const std::vector<int> cur_ids = current.class_ids();
    const std::vector<int> new_ids = utype.class_ids();
    for (int a = 0; a < m; ++a)
      for (int bidx = a + 1; bidx < m; ++bidx)
        if (cur_ids[static_cast<std::size_t>(a)] != cur_ids[static_cast<std::size_t>(bidx)] &&
            new_ids[static_cast<std::size_t>(a)] != new_ids[static_cast<std::size_t>(bidx)])
          stage.pairs.emplace_back(a, bidx);

    stage.taus.reserve(stage.pairs.size());
    for (auto [a, bidx] : stage.pairs)
      stage.taus.push_back((v[static_cast<std::size_t>(a)] - v[static_cast<std::size_t>(bidx)]) /
                           (u[static_cast<std::size_t>(bidx)] - u[static_cast<std::size_t>(a)]));

    // sorted forbidden list, then the smallest nonzero value not on it
    std::vector<Fp> sorted = stage.taus;
    std::sort(sorted.begin(), sorted.end(), [](Fp a, Fp b) { return Fp::less(a, b); });
    Fp chosen = points.field().zero();
    for (std::uint64_t k = 1; k < p; ++k) {
      Fp cand = Fp::from_raw(k, p);
      if (!std::binary_search(sorted.begin(), sorted.end(), cand,
                              [](Fp a, Fp b) { return Fp::less(a, b); })) {
        chosen = cand;
        break;
      }
    }
    if (chosen.is_zero())
      fail(Errc::RetriesExhausted, "no admissible coefficient left in Z_" + std::to_string(p));
    stage.chosen = chosen;

    for (int i = 0; i < m; ++i)
      v[static_cast<std::size_t>(i)] += chosen * u[static_cast<std::size_t>(i)];
    res.coefficients.push_back(chosen);
    {
      Tuple t;
      for (Fp x : v) t.push_back(static_cast<std::int64_t>(x.value()));
      current = type_of(t);
    }
    res.stages.push_back(std::move(stage));
  }

  res.realization = v;
  res.operations = ops.delta().total();
  if (!current.all_singletons())
    fail(Errc::RetriesExhausted, "combination failed to separate the points (forced run?)");
  return res;
}

RealizationCheck check_realization(const PointSet& points, const std::vector<int>& coordinates,
                                   const std::vector<Fp>& coefficients) {
  if (coordinates.size() != coefficients.size())
    fail(Errc::DimensionMismatch, "one coefficient per coordinate expected");
  const int m = points.count();
  RealizationCheck out;
  out.values.assign(static_cast<std::size_t>(m), points.field().zero());
  for (std::size_t h = 0; h < coordinates.size(); ++h) {
    std::vector<Fp> col = points.column(coordinates[h] - 1);
    for (int i = 0; i < m; ++i)
      out.values[static_cast<std::size_t>(i)] += coefficients[h] * col[static_cast<std::size_t>(i)];
  }
  Tuple t;
  for (Fp x : out.values) t.push_back(static_cast<std::int64_t>(x.value()));
  out.valid = type_of(t).all_singletons();
  return out;
}

namespace {

Polynomial linear_form_from(const PointSet& points, const std::vector<int>& coordinates,
                            const std::vector<Fp>& coefficients) {
  Polynomial f = Polynomial::zero(points.dimension(), points.field());
  for (std::size_t h = 0; h < coordinates.size(); ++h)
    f += Polynomial::variable(coordinates[h] - 1, points.dimension(), points.field())
             .scale(coefficients[h]);
  return f;
}

}  // namespace

Basis linear_power_basis_from(const PointSet& points, const std::vector<int>& coordinates,
                              const std::vector<Fp>& coefficients) {
  RealizationCheck check = check_realization(points, coordinates, coefficients);
  if (!check.valid)
    fail(Errc::DuplicateValues, "the linear combination does not take distinct values");
  Polynomial f = linear_form_from(points, coordinates, coefficients);

  BasisProvenance prov;
  prov.witness_coords = coordinates;
  prov.coefficients = coefficients;
  prov.generator = f;
  prov.point_values = check.values;
  prov.univariate_generator = univariate_from_roots(check.values, points.field());
  return power_basis(points, f, BasisKind::LinearPower, std::move(prov));
}

Basis linear_power_basis(const PointSet& points, bool force) {
  DistinctElementResult der = distinct_element_algorithm(points, force);
  Basis b = linear_power_basis_from(points, der.coordinates, der.coefficients);
  b.provenance.comparisons = der.comparisons;
  return b;
}

Basis separator_map_basis(const PointSet& points, const std::vector<Fp>& values) {
  const int m = points.count();
  if (static_cast<int>(values.size()) != m)
    fail(Errc::DimensionMismatch, "one map value per point expected");
  if (points.field().modulus() < static_cast<std::uint64_t>(m))
    fail(Errc::FieldTooSmall, "need at least m = " + std::to_string(m) + " field elements");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(j)])
        fail(Errc::DuplicateValues, "map values must be pairwise distinct");

  Basis seps = separator_basis(points);
  Polynomial pi = Polynomial::zero(points.dimension(), points.field());
  for (int i = 0; i < m; ++i)
    pi += seps.elements[static_cast<std::size_t>(i)].scale(values[static_cast<std::size_t>(i)]);

  BasisProvenance prov;
  prov.witness_coords = seps.provenance.witness_coords;
  prov.generator = pi;
  prov.point_values = values;
  prov.univariate_generator = univariate_from_roots(values, points.field());
  prov.comparisons = seps.provenance.comparisons;
  return power_basis(points, pi, BasisKind::SeparatorMapPower, std::move(prov));
}

RealizationDraw randomized_realization(const PointSet& points, std::uint64_t seed,
                                       int max_retries) {
  const int m = points.count();
  const std::uint64_t p = points.field().modulus();
  if (p < static_cast<std::uint64_t>(m))
    fail(Errc::FieldTooSmall,
         "no " + std::to_string(m) + " distinct values exist in Z_" + std::to_string(p));
  WitnessData wd = require_distinct(points);

  RealizationDraw draw;
  draw.coordinates = wd.witness_list.empty() ? std::vector<int>{1} : wd.witness_list;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    std::vector<Fp> coeffs;
    coeffs.reserve(draw.coordinates.size());
    for (std::size_t h = 0; h < draw.coordinates.size(); ++h)
      coeffs.push_back(Fp::from_raw(dist(rng), p));
    RealizationCheck check = check_realization(points, draw.coordinates, coeffs);
    if (check.valid) {
      draw.coefficients = std::move(coeffs);
      draw.linear_form = linear_form_from(points, draw.coordinates, draw.coefficients);
      draw.attempts = attempt;
      return draw;
    }
  }
  fail(Errc::RetriesExhausted,
       "no realization found in " + std::to_string(max_retries) + " draws");
}

// -- Construction 3 -----------------------------------------------------------

struct LexTrieBuilder {
  LexTrie trie;

  explicit LexTrieBuilder(int n, int m) {
    LexTrie::Node root;
    root.members.resize(static_cast<std::size_t>(m));
    std::iota(root.members.begin(), root.members.end(), 0);
    trie.nodes_.push_back(std::move(root));
    trie.level_nodes_.assign(static_cast<std::size_t>(n) + 1, {});
    trie.level_nodes_[0].push_back(0);
  }

  int add_node(int parent, int level, int label) {
    LexTrie::Node nd;
    nd.level = level;
    nd.parent = parent;
    nd.edge_label = label;
    int id = static_cast<int>(trie.nodes_.size());
    trie.nodes_.push_back(nd);
    trie.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
    trie.level_nodes_[static_cast<std::size_t>(level)].push_back(id);
    return id;
  }

  LexTrie::Node& node(int id) { return trie.nodes_[static_cast<std::size_t>(id)]; }
};

std::vector<Exponents> LexTrie::paths() const {
  std::vector<Exponents> out;
  const int n = levels() - 1;
  for (int leaf : level_nodes_.back()) {
    Exponents e(static_cast<std::size_t>(n), 0);
    int cur = leaf;
    while (cur != root()) {
      const Node& nd = node(cur);
      e[static_cast<std::size_t>(nd.level - 1)] = static_cast<std::uint32_t>(nd.edge_label);
      cur = nd.parent;
    }
    out.push_back(std::move(e));
  }
  return out;
}

LexMonomialResult lex_standard_monomials(const TupleSet& tuples) {
  const int m = tuples.count();
  const int n = tuples.length();
  PointTrieResult pt = build_point_trie(tuples.reversed());
  if (pt.trie.leaf_count() != m) fail(Errc::DuplicatePoints, "points are not pairwise distinct");

  LexMonomialResult res;
  res.comparisons = pt.comparisons;

  LexTrieBuilder lb(n, m);
  std::vector<int> node_of(static_cast<std::size_t>(m), lb.trie.root());
  for (int stage = 1; stage <= n; ++stage) {
    // classes agreeing on the first n-stage reversed coordinates
    Partition sigma = pt.trie.level_partition(n - stage);
    std::map<std::pair<int, int>, int> bucket;  // (node, label) -> new node id
    std::vector<int> next_node_of(static_cast<std::size_t>(m), -1);
    for (const auto& cls : sigma.classes()) {
      std::map<int, int> seen;  // node -> members of this class already there
      for (int member : cls) {
        const int a = node_of[static_cast<std::size_t>(member)];
        const int b = seen[a]++;
        auto [it, inserted] = bucket.try_emplace({a, b}, -1);
        if (inserted) it->second = lb.add_node(a, stage, b);
        lb.node(it->second).members.push_back(member);
        next_node_of[static_cast<std::size_t>(member)] = it->second;
      }
    }
    node_of = std::move(next_node_of);
  }
  res.trie = std::move(lb.trie);

  res.monomials.reserve(static_cast<std::size_t>(m));
  for (auto& e : res.trie.paths()) res.monomials.emplace_back(std::move(e));
  MonomialOrder order = MonomialOrder::lex_standard(n);
  std::sort(res.monomials.begin(), res.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return res;
}

LexMonomialResult lex_standard_monomials(const PointSet& points) {
  return lex_standard_monomials(TupleSet(points.integer_rows()));
}

Basis lex_monomial_basis(const PointSet& points) {
  LexMonomialResult lex = lex_standard_monomials(points);
  Basis b;
  b.kind = BasisKind::LexMonomial;
  b.elements.reserve(lex.monomials.size());
  for (const Monomial& mono : lex.monomials)
    b.elements.push_back(Polynomial::term(mono, points.field().one()));
  b.bp = evaluate_matrix(b.elements, points);
  b.bp_inv = invert(b.bp);
  b.provenance.order_description = MonomialOrder::lex_standard(points.dimension()).to_string();
  b.provenance.comparisons = lex.comparisons;
  return b;
}

// -- Construction 4 -----------------------------------------------------------

ElimResult elimination_standard_monomials(const PointSet& points, const std::vector<int>& tau,
                                          OrderKind order2) {
  const int m = points.count();
  const int n = points.dimension();
  if (static_cast<int>(tau.size()) != n)
    fail(Errc::DimensionMismatch, "permutation length != coordinate count");
  if (order2 == OrderKind::Block)
    fail(Errc::NotApplicable, "order2 must be a plain lex or degrevlex order");

  // permute coordinates, then scan them right to left for the witnesses
  std::vector<std::vector<std::int64_t>> permuted(static_cast<std::size_t>(m));
  const auto raw = points.integer_rows();
  for (int i = 0; i < m; ++i) {
    permuted[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      permuted[static_cast<std::size_t>(i)].push_back(
          raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(tau[static_cast<std::size_t>(k)])]);
  }
  TupleSet permuted_tuples(permuted);
  WitnessData wd = sigma_algorithm(permuted_tuples.reversed());
  if (wd.distinct_count != m) fail(Errc::DuplicatePoints, "points are not pairwise distinct");

  // reversed scan position l corresponds to permuted variable n-l (0-based)
  std::vector<int> witness_vars;
  for (int l : wd.witness_list) witness_vars.push_back(n - l);
  std::sort(witness_vars.begin(), witness_vars.end());
  const int nbar = static_cast<int>(witness_vars.size());

  std::vector<std::vector<std::int64_t>> projected(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int w : witness_vars)
      projected[static_cast<std::size_t>(i)].push_back(
          permuted[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)]);

  std::vector<Monomial> projected_monomials;
  std::uint64_t comparisons = wd.comparisons;
  if (nbar == 0) {
    // single point: the empty witness set leaves only the constant monomial
    projected_monomials.push_back(Monomial::one(0));
  } else if (order2 == OrderKind::Lex) {
    LexMonomialResult lex = lex_standard_monomials(TupleSet(projected));
    projected_monomials = std::move(lex.monomials);
    comparisons += lex.comparisons;
  } else {
    PointSet projected_points(points.field(), projected);
    GroebnerResult gr =
        buchberger_moller(projected_points, MonomialOrder::degrevlex_standard(nbar));
    projected_monomials = std::move(gr.standard_monomials);
  }

  ElimResult res;
  res.witness_vars = witness_vars;
  res.monomials.reserve(projected_monomials.size());
  for (const Monomial& zm : projected_monomials) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < nbar; ++k) {
      const int permuted_var = witness_vars[static_cast<std::size_t>(k)];
      e[static_cast<std::size_t>(tau[static_cast<std::size_t>(permuted_var)])] =
          zm.exponent(k);
    }
    res.monomials.emplace_back(std::move(e));
  }

  Basis& b = res.basis;
  b.kind = BasisKind::ElimMonomial;
  b.elements.reserve(res.monomials.size());
  for (const Monomial& mono : res.monomials)
    b.elements.push_back(Polynomial::term(mono, points.field().one()));
  b.bp = evaluate_matrix(b.elements, points);
  b.bp_inv = invert(b.bp);
  b.provenance.tau = tau;
  b.provenance.witness_coords = [&] {
    std::vector<int> w;  // 1-based permuted variable indices
    for (int v : witness_vars) w.push_back(v + 1);
    return w;
  }();
  b.provenance.order_description =
      (order2 == OrderKind::Lex ? std::string("lex") : std::string("degrevlex")) +
      " on the witness variables, ascending";
  b.provenance.comparisons = comparisons;
  return res;
}

}  // namespace qb
