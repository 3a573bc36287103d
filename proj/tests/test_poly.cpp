// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include <random>

#include "qbasis/points.hpp"
#include "qbasis/poly.hpp"
#include "support.hpp"

using namespace qb;

namespace {

PointSet fixture_points(std::uint64_t p) {
  return PointSet(PrimeField(p), qbtest::six_point_fixture());
}

}  // namespace

TEST_CASE("evaluation on the six-point fixture") {
  PrimeField z43(43);
  Polynomial f = parse_polynomial("x1*x2*x4+x4*x5*x6*x7", 8, z43);
  PointSet pts = fixture_points(43);
  CHECK(f.evaluate(pts.row(0)).value() == 2);
  CHECK(f.evaluate(pts.row(2)).value() == 24);
  std::vector<std::uint64_t> expected{2, 0, 24, 0, 0, 2};
  for (int j = 0; j < 6; ++j) CHECK(f.evaluate(pts.row(j)).value() == expected[static_cast<std::size_t>(j)]);
  CHECK(Polynomial::zero(8, z43).evaluate(pts.row(3)).value() == 0);
}

TEST_CASE("evaluate_matrix gives rows of evaluations") {
  PrimeField z3(3);
  PointSet pts(z3, {{2, 2, 2}, {1, 0, 2}, {1, 0, 0}, {0, 1, 1}});
  std::vector<Polynomial> basis = {
      parse_polynomial("1", 3, z3), parse_polynomial("x3", 3, z3),
      parse_polynomial("x3^2", 3, z3), parse_polynomial("x2", 3, z3)};
  FpMatrix m = evaluate_matrix(basis, pts);
  std::vector<std::vector<std::uint64_t>> expected{
      {1, 1, 1, 1}, {2, 2, 0, 1}, {1, 1, 0, 1}, {2, 0, 0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(m.at(i, j).value() == expected[i][j]);

  std::vector<Polynomial> ones = {parse_polynomial("1", 3, z3)};
  FpMatrix row = evaluate_matrix(ones, pts);
  for (std::size_t j = 0; j < 4; ++j) CHECK(row.at(0, j).value() == 1);
}

TEST_CASE("powers of a linear form give a Vandermonde evaluation matrix") {
  PrimeField z43(43);
  PointSet pts(z43, qbtest::six_point_fixture_alt());
  Polynomial f = parse_polynomial("x1+2*x2+x4", 8, z43);
  std::vector<Polynomial> powers;
  for (std::uint32_t k = 0; k < 6; ++k) powers.push_back(f.pow(k));
  FpMatrix m = evaluate_matrix(powers, pts);
  std::vector<std::uint64_t> values{6, 2, 7, 0, 1, 5};
  for (std::size_t j = 0; j < 6; ++j) {
    Fp acc = z43.one();
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(m.at(i, j).value() == acc.value());
      acc *= Fp::from_raw(values[j], 43);
    }
  }
}

TEST_CASE("monomial order comparisons") {
  MonomialOrder lex = MonomialOrder::lex_standard(3);
  Monomial x1 = Monomial::variable(0, 3);
  Monomial x3sq = Monomial::variable(2, 3, 2);
  CHECK(lex.compare(x1, x3sq) > 0);  // lex ignores degree
  CHECK(lex.compare(x1, x1) == 0);

  // block order: degrevlex part decides first
  MonomialOrder block = MonomialOrder::block(
      MonomialOrder::lex({7, 1, 2, 3, 5}), MonomialOrder::degrevlex({4, 6, 0}));
  Monomial x8 = Monomial::variable(7, 8);
  Monomial x1of8 = Monomial::variable(0, 8);
  CHECK(block.compare(x8, x1of8) < 0);
}

TEST_CASE("block comparison ignores the eliminated part when blocks differ") {
  std::mt19937_64 rng(11);
  MonomialOrder block = MonomialOrder::block(
      MonomialOrder::lex({7, 1, 2, 3, 5}), MonomialOrder::degrevlex({4, 6, 0}));
  MonomialOrder second = MonomialOrder::degrevlex({4, 6, 0});
  std::uniform_int_distribution<std::uint32_t> d(0, 3);
  for (int t = 0; t < 300; ++t) {
    Exponents u(8), v(8);
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    Monomial mu(u), mv(v);
    if (second.compare(mu, mv) != 0) CHECK(block.compare(mu, mv) == second.compare(mu, mv));
  }
}

TEST_CASE("orders are total, multiplicative and have 1 as minimum") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> d(0, 4);
  auto random_mono = [&](int n) {
    Exponents e(static_cast<std::size_t>(n));
    for (auto& x : e) x = d(rng);
    return Monomial(e);
  };
  std::vector<MonomialOrder> orders = {MonomialOrder::lex_standard(4),
                                       MonomialOrder::degrevlex_standard(4),
                                       MonomialOrder::block(MonomialOrder::lex({0, 1}),
                                                            MonomialOrder::degrevlex({2, 3}))};
  Monomial one = Monomial::one(4);
  for (const auto& order : orders) {
    for (int t = 0; t < 200; ++t) {
      Monomial a = random_mono(4), b = random_mono(4), c = random_mono(4);
      CHECK(order.compare(a, b) == -order.compare(b, a));
      if (order.compare(a, b) <= 0 && order.compare(b, c) <= 0) CHECK(order.compare(a, c) <= 0);
      CHECK(order.compare(a * c, b * c) == order.compare(a, b));
      if (!a.is_one()) CHECK(order.compare(one, a) < 0);
      CHECK((order.compare(a, b) == 0) == (a == b));
    }
  }
}

TEST_CASE("polynomial ring operations") {
  PrimeField z43(43);
  Polynomial x1 = Polynomial::variable(0, 1, z43);
  Polynomial f = (x1 - Polynomial::constant(z43.one(), 1)) *
                 (x1 - Polynomial::constant(z43.element(2), 1));
  CHECK(f == parse_polynomial("x1^2+40*x1+2", 1, z43));

  Polynomial g = parse_polynomial("3*x1^2+5*x1", 1, z43);
  CHECK((g + (-g)).is_zero());
  CHECK(g.scale(z43.zero()).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
  PrimeField f(17);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 120; ++t) {
    Polynomial a = qbtest::random_polynomial(rng, f, 3, 5, 3);
    Polynomial b = qbtest::random_polynomial(rng, f, 3, 5, 3);
    auto pt = qbtest::random_point(rng, f, 3);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("polynomial text round trip") {
  PrimeField z43(43);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    Polynomial f = qbtest::random_polynomial(rng, z43, 4, 6, 4);
    CHECK(parse_polynomial(f.to_string(), 4, z43) == f);
  }
  CHECK(parse_polynomial("0", 4, z43).is_zero());
  CHECK(parse_polynomial("x2^3*x1", 4, z43) ==
        Polynomial::term(Monomial(Exponents{1, 3, 0, 0}), z43.one()));
  CHECK(parse_polynomial("-1", 4, z43) == Polynomial::constant(z43.element(42), 4));
  CHECK_THROWS_AS(parse_polynomial("x9", 4, z43), Error);
  CHECK_THROWS_AS(parse_polynomial("3**x1", 4, z43), Error);
  CHECK_THROWS_AS(parse_polynomial("", 4, z43), Error);
}
