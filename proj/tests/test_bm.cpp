// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include <random>

#include "qbasis/bm.hpp"
#include "qbasis/normalform.hpp"
#include "support.hpp"

using namespace qb;

TEST_CASE("groebner basis of the trajectory domain states") {
  PrimeField z3(3);
  PointSet pts(z3, {{2, 2, 2}, {1, 0, 2}, {1, 0, 0}, {0, 1, 1}});
  GroebnerResult res = buchberger_moller(pts, MonomialOrder::lex_standard(3));

  std::vector<Monomial> expected_standard = {
      Monomial(Exponents{0, 0, 0}), Monomial(Exponents{0, 0, 1}),
      Monomial(Exponents{0, 0, 2}), Monomial(Exponents{0, 1, 0})};
  CHECK(res.standard_monomials == expected_standard);

  auto contains = [&](const std::string& text) {
    Polynomial g = parse_polynomial(text, 3, z3);
    for (const auto& f : res.groebner)
      if (f == g) return true;
    return false;
  };
  CHECK(contains("x1+x2+2"));
  CHECK(contains("x2*x3+x2+2*x3^2+2*x3"));
  CHECK(contains("x2^2+x2+2*x3^2+2*x3"));
  CHECK(contains("x3^3+2*x3"));  // the pure power needed to cut the staircase
  CHECK(res.groebner.size() == 4);

  // every element vanishes on every point
  for (const auto& g : res.groebner)
    for (int j = 0; j < 4; ++j) CHECK(g.evaluate(pts.row(j)).is_zero());
}

TEST_CASE("single point gives linear generators") {
  PrimeField z3(3);
  PointSet pts(z3, {{2, 0, 1}});
  GroebnerResult res = buchberger_moller(pts, MonomialOrder::lex_standard(3));
  CHECK(res.standard_monomials == std::vector<Monomial>{Monomial::one(3)});
  REQUIRE(res.groebner.size() == 3);
  CHECK(res.groebner[0] == parse_polynomial("x3+2", 3, z3));
  CHECK(res.groebner[1] == parse_polynomial("x2", 3, z3));
  CHECK(res.groebner[2] == parse_polynomial("x1+1", 3, z3));
}

TEST_CASE("projected fixture under degrevlex") {
  PrimeField z43(43);
  // (y8, y7, y6) coordinates of the permuted six-point fixture, ascending
  // variable order (y6, y7, y8) = slots (x5, x7, x1)
  PointSet proj(z43, {{1, 3, 1}, {2, 3, 1}, {3, 2, 1}, {4, 2, 0}, {5, 2, 0}, {6, 2, 2}});
  GroebnerResult res = buchberger_moller(proj, MonomialOrder::degrevlex_standard(3));
  // standard monomials 1, z3, z2, z1, z3^2, z1*z3 (z1=y6, z2=y7, z3=y8)
  std::vector<Monomial> expected = {
      Monomial(Exponents{0, 0, 0}), Monomial(Exponents{0, 0, 1}), Monomial(Exponents{0, 1, 0}),
      Monomial(Exponents{1, 0, 0}), Monomial(Exponents{0, 0, 2}), Monomial(Exponents{1, 0, 1})};
  CHECK(res.standard_monomials == expected);
}

TEST_CASE("groebner result invariants on random instances") {
  std::mt19937_64 rng(8);
  PrimeField z5(5);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    auto rows = qbtest::random_distinct_rows(rng, 1 + static_cast<int>(rng() % 7), n, 5);
    const int m = static_cast<int>(rows.size());
    PointSet pts(z5, rows);
    MonomialOrder order = (t % 2) ? MonomialOrder::lex_standard(n)
                                  : MonomialOrder::degrevlex_standard(n);
    GroebnerResult res = buchberger_moller(pts, order);

    CHECK(static_cast<int>(res.standard_monomials.size()) == m);
    CHECK(qbtest::is_order_ideal(res.standard_monomials));
    for (const auto& g : res.groebner)
      for (int j = 0; j < m; ++j) CHECK(g.evaluate(pts.row(j)).is_zero());

    // leading monomials generate the complement of the standard set
    for (const auto& s : res.standard_monomials)
      for (const auto& g : res.groebner)
        CHECK(!g.leading_monomial(order).divides(s));

    // evaluation matrix of the standard monomials is invertible
    std::vector<Polynomial> elems;
    for (const auto& s : res.standard_monomials)
      elems.push_back(Polynomial::term(s, z5.one()));
    CHECK_NOTHROW(invert(evaluate_matrix(elems, pts)));

    // reduction closure: nf(standard * variable) preserves evaluations
    Basis b;
    b.kind = BasisKind::LexMonomial;
    b.elements = elems;
    b.bp = evaluate_matrix(elems, pts);
    b.bp_inv = invert(b.bp);
    for (const auto& s : res.standard_monomials) {
      for (int i = 0; i < n; ++i) {
        Polynomial prod = Polynomial::term(s * Monomial::variable(i, n), z5.one());
        NormalFormResult nf = normal_form(prod, b, pts);
        for (int j = 0; j < m; ++j)
          CHECK(nf.polynomial.evaluate(pts.row(j)) == prod.evaluate(pts.row(j)));
      }
    }
  }
}

TEST_CASE("duplicate points are rejected") {
  PrimeField z5(5);
  PointSet pts(z5, {{1, 2}, {1, 2}});
  CHECK_THROWS_AS(buchberger_moller(pts, MonomialOrder::lex_standard(2)), Error);
}
