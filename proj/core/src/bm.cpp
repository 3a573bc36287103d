// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/bm.hpp"

#include <set>

#include "qbasis/bases.hpp"

namespace qb {

namespace {

struct ReducedRow {
  std::vector<Fp> vec;   // evaluation vector after elimination
  std::size_t pivot;     // first nonzero position
  Polynomial combo;      // polynomial with this evaluation vector
};

}  // namespace

GroebnerResult buchberger_moller(const PointSet& points, const MonomialOrder& order) {
  require_distinct(points);
  const int m = points.count();
  const int n = points.dimension();
  const PrimeField& field = points.field();

  GroebnerResult res;
  res.order = order;

  auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::set<Monomial, decltype(cmp)> candidates(cmp);
  candidates.insert(Monomial::one(n));

  std::vector<ReducedRow> rows;
  std::vector<Monomial> leads;

  while (!candidates.empty()) {
    Monomial u = *candidates.begin();
    candidates.erase(candidates.begin());
    bool divisible = false;
    for (const Monomial& lead : leads) {
      if (lead.divides(u)) {
        divisible = true;
        break;
      }
    }
    if (divisible) continue;

    std::vector<Fp> v;
    v.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) v.push_back(u.evaluate(points.row(j)));
    Polynomial g = Polynomial::term(u, field.one());

    for (const ReducedRow& row : rows) {
      Fp x = v[row.pivot];
      if (x.is_zero()) continue;
      Fp factor = x / row.vec[row.pivot];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * row.vec[k];
      g -= row.combo.scale(factor);
    }

    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) {
      // dependent: g = u - (combination of standard monomials) vanishes on
      // all points, and its tail is already reduced
      res.groebner.push_back(std::move(g));
      leads.push_back(u);
    } else {
      res.standard_monomials.push_back(u);
      rows.push_back(ReducedRow{std::move(v), pivot, g});
      for (int i = 0; i < n; ++i)
        candidates.insert(u * Monomial::variable(i, n));
    }
  }
  return res;
}

}  // namespace qb
