// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <benchmark/benchmark.h>

#include <random>

#include "qbasis/preprocess.hpp"

namespace {

qb::TupleSet random_tuples(int m, int n, std::int64_t alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, alphabet - 1);
  std::vector<qb::Tuple> rows(static_cast<std::size_t>(m),
                              qb::Tuple(static_cast<std::size_t>(n)));
  for (auto& r : rows)
    for (auto& v : r) v = dist(rng);
  return qb::TupleSet(std::move(rows));
}

void bm_sigma(benchmark::State& state) {
  qb::TupleSet tuples = random_tuples(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 5, 42);
  for (auto _ : state) {
    auto wd = qb::sigma_algorithm(tuples);
    benchmark::DoNotOptimize(wd.comparisons);
  }
}
BENCHMARK(bm_sigma)->Args({32, 64})->Args({128, 64})->Args({512, 64})->Args({64, 512});

void bm_sigma_sorted(benchmark::State& state) {
  qb::TupleSet tuples = random_tuples(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 5, 42);
  for (auto _ : state) {
    auto res = qb::sigma_algorithm_sorted(tuples);
    benchmark::DoNotOptimize(res.scan_comparisons);
  }
}
BENCHMARK(bm_sigma_sorted)->Args({32, 64})->Args({128, 64})->Args({512, 64});

void bm_point_trie(benchmark::State& state) {
  qb::TupleSet tuples = random_tuples(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)), 5, 42);
  for (auto _ : state) {
    auto res = qb::build_point_trie(tuples);
    benchmark::DoNotOptimize(res.comparisons);
  }
}
BENCHMARK(bm_point_trie)->Args({32, 64})->Args({128, 64})->Args({512, 64})->Args({64, 512});

}  // namespace
