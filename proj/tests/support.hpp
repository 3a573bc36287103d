// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "qbasis/bases.hpp"
#include "qbasis/poly.hpp"
#include "qbasis/preprocess.hpp"

namespace qbtest {

using Rows = std::vector<std::vector<std::int64_t>>;

// Six 8-coordinate points used across the golden tests.
inline Rows six_point_fixture() {
  return {
      {1, 2, 0, 1, 1, 0, 3, 5}, {1, 0, 1, 1, 2, 0, 3, 5}, {1, 2, 0, 3, 3, 1, 2, 0},
      {0, 0, 2, 0, 4, 0, 2, 0}, {0, 0, 2, 1, 5, 0, 2, 0}, {2, 1, 3, 1, 6, 0, 2, 0},
  };
}

// Variant with the third point's fourth coordinate lowered to 2; the
// worked isomorphism example is consistent with this data set.
inline Rows six_point_fixture_alt() {
  Rows rows = six_point_fixture();
  rows[2][3] = 2;
  return rows;
}

// Six 4-coordinate points whose reversed tuples reproduce the first four
// coordinates of the fixture above.
inline Rows lex_fixture() {
  return {
      {1, 0, 2, 1}, {1, 1, 0, 1}, {3, 0, 2, 1}, {0, 2, 0, 0}, {1, 2, 0, 0}, {1, 3, 1, 2},
  };
}

// Five 3-variable samples of a discrete trajectory with a fixed point at
// the end.
inline Rows trajectory_fixture() {
  return {{2, 2, 2}, {1, 0, 2}, {1, 0, 0}, {0, 1, 1}, {0, 1, 1}};
}

inline Rows random_tuples(std::mt19937_64& rng, int m, int n, std::int64_t alphabet) {
  std::uniform_int_distribution<std::int64_t> dist(0, alphabet - 1);
  Rows rows(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (auto& r : rows)
    for (auto& v : r) v = dist(rng);
  return rows;
}

// Caps m at the number of available distinct tuples.
inline int feasible_count(int m, int n, std::int64_t alphabet) {
  std::int64_t space = 1;
  for (int i = 0; i < n; ++i) {
    space *= alphabet;
    if (space >= m) return m;
  }
  return static_cast<int>(std::min<std::int64_t>(m, space));
}

inline Rows random_distinct_rows(std::mt19937_64& rng, int m, int n, std::int64_t alphabet) {
  m = feasible_count(m, n, alphabet);
  std::set<std::vector<std::int64_t>> seen;
  Rows rows;
  std::uniform_int_distribution<std::int64_t> dist(0, alphabet - 1);
  int guard = 0;
  while (static_cast<int>(rows.size()) < m) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(n));
    for (auto& v : r) v = dist(rng);
    if (seen.insert(r).second) rows.push_back(std::move(r));
    if (++guard > 1000000) throw std::runtime_error("fixture generator stuck");
  }
  return rows;
}

inline qb::Polynomial random_polynomial(std::mt19937_64& rng, const qb::PrimeField& field,
                                        int nvars, int max_terms, std::uint32_t max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
  std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(field.modulus()) - 1);
  qb::Polynomial f = qb::Polynomial::zero(nvars, field);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    qb::Exponents e(static_cast<std::size_t>(nvars));
    for (auto& x : e) x = expd(rng);
    f += qb::Polynomial::term(qb::Monomial(e), field.element(coeff(rng)));
  }
  return f;
}

inline std::vector<qb::Fp> random_point(std::mt19937_64& rng, const qb::PrimeField& field,
                                        int nvars) {
  std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(field.modulus()) - 1);
  std::vector<qb::Fp> p;
  p.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) p.push_back(field.element(dist(rng)));
  return p;
}

// A consistent time series: distinct domain rows plus one free final row.
inline Rows random_consistent_series(std::mt19937_64& rng, int m, int n, std::int64_t p) {
  Rows rows = random_distinct_rows(rng, m, n, p);
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  std::vector<std::int64_t> last(static_cast<std::size_t>(n));
  for (auto& v : last) v = dist(rng);
  rows.push_back(std::move(last));
  return rows;
}

inline bool is_order_ideal(const std::vector<qb::Monomial>& monos) {
  std::set<qb::Exponents> have;
  for (const auto& m : monos) have.insert(m.exponents());
  for (const auto& m : monos) {
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.exponent(i) == 0) continue;
      qb::Exponents e = m.exponents();
      e[static_cast<std::size_t>(i)] -= 1;
      if (!have.count(e)) return false;
    }
  }
  return true;
}

}  // namespace qbtest
