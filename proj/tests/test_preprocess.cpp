// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include <random>

#include "qbasis/preprocess.hpp"
#include "support.hpp"

using namespace qb;

namespace {

Partition P(std::vector<std::vector<int>> one_based) {
  for (auto& cls : one_based)
    for (auto& i : cls) --i;
  return Partition::of_classes(std::move(one_based));
}

}  // namespace

TEST_CASE("witness of two tuples") {
  auto rows = qbtest::six_point_fixture();
  CHECK(witness(rows[0], rows[1]) == 2);
  CHECK(witness(rows[0], rows[0]) == 0);
  CHECK(witness(rows[3], rows[4]) == 4);
  CHECK_THROWS_AS(witness({1, 2}, {1, 2, 3}), Error);
}

TEST_CASE("six-point fixture: partitions, witness list, matrix, branching") {
  TupleSet tuples(qbtest::six_point_fixture());
  WitnessData wd = sigma_algorithm(tuples);

  CHECK(wd.sigma_at(0) == P({{1, 2, 3, 4, 5, 6}}));
  CHECK(wd.sigma_at(1) == P({{1, 2, 3}, {4, 5}, {6}}));
  CHECK(wd.sigma_at(2) == P({{1, 3}, {2}, {4, 5}, {6}}));
  CHECK(wd.sigma_at(3) == P({{1, 3}, {2}, {4, 5}, {6}}));
  CHECK(wd.sigma_at(4) == Partition::singletons(6));
  CHECK(wd.sigma_at(8) == Partition::singletons(6));
  CHECK(wd.stop_level == 4);

  CHECK(wd.witness_list == std::vector<int>{1, 2, 4});
  CHECK(wd.distinct_count == 6);
  CHECK(wd.branching == 3);

  const std::vector<std::vector<int>> expected_c{
      {0, 2, 4, 1, 1, 1}, {0, 0, 2, 1, 1, 1}, {0, 0, 0, 1, 1, 1},
      {0, 0, 0, 0, 4, 1}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(wd.matrix.get(i, j) == expected_c[static_cast<std::size_t>(std::min(i, j))][static_cast<std::size_t>(std::max(i, j))]);
}

TEST_CASE("degenerate tuple sets") {
  WitnessData one = sigma_algorithm(TupleSet({{5, 1, 2}}));
  CHECK(one.sigma_at(3) == Partition::singletons(1));
  CHECK(one.witness_list.empty());
  CHECK(one.comparisons == 0);
  CHECK(one.distinct_count == 1);
  CHECK(one.branching == 1);

  WitnessData dup = sigma_algorithm(TupleSet({{1, 2, 3, 4}, {1, 2, 3, 4}}));
  CHECK(dup.sigma_at(4) == P({{1, 2}}));
  CHECK(dup.distinct_count == 1);
  CHECK(dup.matrix.get(0, 1) == 0);
  CHECK(dup.comparisons == 4);  // one comparison per coordinate, never splits

  CHECK_THROWS_AS(TupleSet({{1, 2}, {1}}), Error);
}

TEST_CASE("witness matrix against direct pairwise scans") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    int m = 1 + static_cast<int>(rng() % 12);
    int n = 1 + static_cast<int>(rng() % 8);
    auto rows = qbtest::random_tuples(rng, m, n, 3);
    TupleSet tuples(rows);
    WitnessData wd = sigma_algorithm(tuples);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        CHECK(wd.matrix.get(i, j) == witness(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]));
    for (int l = 1; l <= n; ++l) CHECK(wd.sigma_at(l).refines(wd.sigma_at(l - 1)));
  }
}

TEST_CASE("point trie reproduces the level partitions and branching factor") {
  TupleSet tuples(qbtest::six_point_fixture());
  PointTrieResult pt = build_point_trie(tuples);
  WitnessData wd = sigma_algorithm(tuples);

  for (int l = 0; l <= 8; ++l) CHECK(pt.trie.level_partition(l) == wd.sigma_at(l));
  CHECK(branching_factor(pt.trie) == 3);
  CHECK(pt.trie.leaf_count() == 6);
  CHECK(pt.comparisons == wd.comparisons);

  // first four coordinates: root, then {1,2,3},{4,5},{6}, ..., six leaves
  TupleSet four(PointSet(PrimeField(43), qbtest::six_point_fixture()).integer_rows());
  std::vector<Tuple> cut;
  for (int i = 0; i < 6; ++i)
    cut.push_back(Tuple(four.row(i).begin(), four.row(i).begin() + 4));
  PointTrieResult head = build_point_trie(TupleSet(cut));
  CHECK(head.trie.level_partition(1) == P({{1, 2, 3}, {4, 5}, {6}}));
  CHECK(head.trie.level_partition(2) == P({{1, 3}, {2}, {4, 5}, {6}}));
  CHECK(head.trie.level_partition(3) == P({{1, 3}, {2}, {4, 5}, {6}}));
  CHECK(head.trie.level_partition(4) == Partition::singletons(6));
  CHECK(head.trie.leaf_count() == 6);
  CHECK(branching_factor(head.trie) == 3);
}

TEST_CASE("trie edge cases") {
  PointTrieResult single = build_point_trie(TupleSet({{7, 8, 9}}));
  CHECK(branching_factor(single.trie) == 1);
  CHECK(single.comparisons == 0);

  PointTrieResult wide = build_point_trie(TupleSet({{0}, {1}, {2}, {3}}));
  CHECK(branching_factor(wide.trie) == 4);
}

TEST_CASE("sigma and point trie perform the same comparisons") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 400; ++t) {
    int m = 1 + static_cast<int>(rng() % 20);
    int n = 1 + static_cast<int>(rng() % 12);
    std::int64_t alphabet = 2 + static_cast<std::int64_t>(rng() % 5);
    TupleSet tuples(qbtest::random_tuples(rng, m, n, alphabet));
    WitnessData wd = sigma_algorithm(tuples);
    PointTrieResult pt = build_point_trie(tuples);
    CHECK(wd.comparisons == pt.comparisons);
    const std::uint64_t um = static_cast<std::uint64_t>(m), un = static_cast<std::uint64_t>(n);
    const std::uint64_t r = static_cast<std::uint64_t>(wd.branching);
    CHECK(wd.comparisons <= un * um + um * um);
    CHECK(wd.comparisons <= un * um + um * std::min(um, un * r));
    CHECK(branching_factor(pt.trie) == wd.branching);
    for (int l = 0; l <= n; ++l) CHECK(pt.trie.level_partition(l) == wd.sigma_at(l));
  }
}

TEST_CASE("sorted variant computes identical data with at most m scans per stage") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 250; ++t) {
    int m = 1 + static_cast<int>(rng() % 16);
    int n = 1 + static_cast<int>(rng() % 10);
    TupleSet tuples(qbtest::random_tuples(rng, m, n, 4));
    WitnessData wd = sigma_algorithm(tuples);
    SortedSigmaResult sorted = sigma_algorithm_sorted(tuples);
    CHECK(sorted.data.witness_list == wd.witness_list);
    CHECK(sorted.data.distinct_count == wd.distinct_count);
    CHECK(sorted.data.branching == wd.branching);
    CHECK(sorted.data.matrix == wd.matrix);
    for (int l = 0; l <= n; ++l) CHECK(sorted.data.sigma_at(l) == wd.sigma_at(l));
    CHECK(sorted.scan_comparisons <= static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m));
  }

  SortedSigmaResult single = sigma_algorithm_sorted(TupleSet({{3, 1, 4}}));
  CHECK(single.scan_comparisons == 0);
  CHECK(single.sort_comparisons == 0);

  SortedSigmaResult pair = sigma_algorithm_sorted(TupleSet({{0, 1}, {1, 1}}), true);
  CHECK(pair.scan_comparisons <= 4);  // at most n per stage for m = 2
}

TEST_CASE("type_of groups equal entries") {
  CHECK(type_of({1, 2, 0, 3, 1, 0}) == P({{1, 5}, {2}, {3, 6}, {4}}));
  CHECK(type_of({7, 7, 7}) == P({{1, 2, 3}}));
  CHECK(type_of({4, 2, 9}) == Partition::singletons(3));
}

TEST_CASE("distinct tuples project injectively onto the witness coordinates") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    int m = 2 + static_cast<int>(rng() % 10);
    int n = 2 + static_cast<int>(rng() % 8);
    auto rows = qbtest::random_tuples(rng, m, n, 3);
    TupleSet tuples(rows);
    WitnessData wd = sigma_algorithm(tuples);
    // keep one representative per distinct tuple, project onto W
    std::set<std::vector<std::int64_t>> projections;
    std::set<std::vector<std::int64_t>> distinct(rows.begin(), rows.end());
    for (const auto& row : distinct) {
      std::vector<std::int64_t> proj;
      for (int w : wd.witness_list) proj.push_back(row[static_cast<std::size_t>(w - 1)]);
      projections.insert(proj);
    }
    CHECK(projections.size() == distinct.size());
  }
}
