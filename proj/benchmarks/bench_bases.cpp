// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "qbasis/bases.hpp"
#include "qbasis/bm.hpp"
#include "qbasis/grn.hpp"
#include "qbasis/normalform.hpp"

namespace {

std::vector<std::vector<std::int64_t>> distinct_rows(int m, int n, std::int64_t alphabet,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, alphabet - 1);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> rows;
  while (static_cast<int>(rows.size()) < m) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(n));
    for (auto& v : r) v = dist(rng);
    if (seen.insert(r).second) rows.push_back(std::move(r));
  }
  return rows;
}

void bm_separator_basis(benchmark::State& state) {
  qb::PrimeField field(101);
  qb::PointSet pts(field, distinct_rows(static_cast<int>(state.range(0)), 6, 101, 7));
  for (auto _ : state) {
    qb::Basis b = qb::separator_basis(pts);
    benchmark::DoNotOptimize(b.elements.size());
  }
}
BENCHMARK(bm_separator_basis)->Arg(4)->Arg(8)->Arg(12);

void bm_lex_standard_monomials(benchmark::State& state) {
  qb::PrimeField field(5);
  qb::PointSet pts(field,
                   distinct_rows(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)), 5, 11));
  for (auto _ : state) {
    auto res = qb::lex_standard_monomials(pts);
    benchmark::DoNotOptimize(res.monomials.size());
  }
}
BENCHMARK(bm_lex_standard_monomials)->Args({16, 8})->Args({64, 8})->Args({16, 64});

void bm_buchberger_moller(benchmark::State& state) {
  qb::PrimeField field(5);
  qb::PointSet pts(field, distinct_rows(static_cast<int>(state.range(0)), 4, 5, 13));
  qb::MonomialOrder order = qb::MonomialOrder::degrevlex_standard(4);
  for (auto _ : state) {
    auto res = qb::buchberger_moller(pts, order);
    benchmark::DoNotOptimize(res.standard_monomials.size());
  }
}
BENCHMARK(bm_buchberger_moller)->Arg(8)->Arg(16)->Arg(32);

void bm_normal_form(benchmark::State& state) {
  qb::PrimeField field(43);
  qb::PointSet pts(field, distinct_rows(static_cast<int>(state.range(0)), 6, 43, 17));
  qb::Basis basis = qb::lex_monomial_basis(pts);
  std::mt19937_64 rng(3);
  qb::Polynomial f = qb::Polynomial::zero(6, field);
  for (int t = 0; t < 12; ++t) {
    qb::Exponents e(6);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 4);
    f += qb::Polynomial::term(qb::Monomial(e),
                              field.element(static_cast<std::int64_t>(rng() % 43)));
  }
  for (auto _ : state) {
    auto nf = qb::normal_form(f, basis, pts);
    benchmark::DoNotOptimize(nf.coefficients.size());
  }
}
BENCHMARK(bm_normal_form)->Arg(8)->Arg(16)->Arg(32);

void bm_reveng_lex(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto rows = distinct_rows(m, n, 5, 23);
  std::mt19937_64 rng(29);
  std::vector<std::int64_t> last(static_cast<std::size_t>(n));
  for (auto& v : last) v = static_cast<std::int64_t>(rng() % 5);
  rows.push_back(last);
  qb::PrimeField field(5);
  for (auto _ : state) {
    qb::GRNModel model = qb::transition_functions(rows, field, {});
    benchmark::DoNotOptimize(model.transitions.size());
  }
}
BENCHMARK(bm_reveng_lex)->Args({8, 64})->Args({16, 128})->Args({24, 200});

}  // namespace

BENCHMARK_MAIN();
