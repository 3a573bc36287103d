// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbasis/errors.hpp"

namespace qb {

using Tuple = std::vector<std::int64_t>;

/// A list of m equal-length tuples over an alphabet with decidable
/// equality (plain integers; field elements enter via their canonical
/// representatives).
class TupleSet {
 public:
  explicit TupleSet(std::vector<Tuple> rows);

  int count() const { return static_cast<int>(rows_.size()); }    // m
  int length() const { return n_; }                                // n
  std::int64_t at(int i, int j) const { return rows_[i][static_cast<std::size_t>(j)]; }
  const Tuple& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  TupleSet reversed() const;

 private:
  std::vector<Tuple> rows_;
  int n_;
};

/// A partition of {0..m-1} into disjoint index classes. Classes hold
/// ascending members and are listed by smallest member, so equal
/// partitions compare equal structurally.
class Partition {
 public:
  Partition() = default;
  static Partition of_classes(std::vector<std::vector<int>> classes);
  static Partition whole(int m);
  static Partition singletons(int m);

  int class_count() const { return static_cast<int>(classes_.size()); }
  int element_count() const;
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  bool all_singletons() const;
  /// True when every class of *this is contained in a class of coarser.
  bool refines(const Partition& coarser) const;
  /// Class id per element, classes numbered in listing order.
  std::vector<int> class_ids() const;

  bool operator==(const Partition& o) const { return classes_ == o.classes_; }
  bool operator!=(const Partition& o) const { return classes_ != o.classes_; }
  std::string to_string() const;  // 1-based, e.g. {{1,2,3},{4,5},{6}}

 private:
  std::vector<std::vector<int>> classes_;
};

/// The partition of {0..m-1} grouping equal entries of a vector.
Partition type_of(const Tuple& values);

/// 1-based index of the first coordinate where the tuples differ, or 0
/// when they are equal.
int witness(const Tuple& a, const Tuple& b);

/// Pairwise witnesses c_{ij} for i < j, stored densely for small m and as
/// a sparse map beyond `dense_cap`.
class WitnessMatrix {
 public:
  WitnessMatrix() : m_(0), dense_(true) {}
  explicit WitnessMatrix(int m, int dense_cap = kDefaultDenseCap);

  int size() const { return m_; }
  int get(int i, int j) const;
  void set_pair(int i, int j, int w);
  /// Entries c_{ij} for i < j in row-major order.
  std::vector<int> upper_triangle_row_major() const;
  bool operator==(const WitnessMatrix& o) const;

  static constexpr int kDefaultDenseCap = 4096;

 private:
  std::size_t index(int i, int j) const;  // requires i < j
  int m_;
  bool dense_;
  std::vector<std::int32_t> dense_data_;
  std::map<std::pair<int, int>, std::int32_t> sparse_;
};

/// Everything the coordinate-wise refinement computes: the partitions
/// Sigma_0..Sigma_n, the witness list W, the witness matrix C, the number
/// of distinct tuples, the trie branching factor r, and the number of
/// alphabet comparisons spent.
struct WitnessData {
  int m = 0;
  int n = 0;
  std::vector<Partition> sigma_levels;  // levels 0..stop_level
  int stop_level = 0;                   // levels beyond it equal sigma_levels.back()
  std::vector<int> witness_list;        // 1-based coordinates, ascending
  WitnessMatrix matrix;
  int distinct_count = 0;  // m_bar
  int branching = 0;       // r
  std::uint64_t comparisons = 0;

  const Partition& sigma_at(int level) const;
};

/// Stage-wise refinement over the coordinates. Classes are split against
/// their smallest member, re-processing the disagreeing part at the same
/// coordinate, and the scan stops early once every class is a singleton.
WitnessData sigma_algorithm(const TupleSet& tuples,
                            int dense_cap = WitnessMatrix::kDefaultDenseCap);

/// Variant for a totally ordered alphabet: tuples are sorted
/// lexicographically first (unless `presorted`), after which each stage
/// only compares adjacent members of a class.
struct SortedSigmaResult {
  WitnessData data;
  std::uint64_t sort_comparisons = 0;
  std::uint64_t scan_comparisons = 0;
};
SortedSigmaResult sigma_algorithm_sorted(const TupleSet& tuples, bool presorted = false,
                                         int dense_cap = WitnessMatrix::kDefaultDenseCap);

/// The tree whose level-i vertices are the classes of Sigma_i; edges carry
/// the shared coordinate value of the child class.
class PointTrie {
 public:
  struct Node {
    int level = 0;
    int parent = -1;
    std::int64_t edge_value = 0;  // value on the edge from the parent
    std::vector<int> members;     // ascending tuple indices
    std::vector<int> children;    // node ids in creation order
  };

  int root() const { return 0; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int levels() const { return static_cast<int>(level_nodes_.size()); }  // n + 1
  const std::vector<int>& level_nodes(int level) const {
    return level_nodes_[static_cast<std::size_t>(level)];
  }
  Partition level_partition(int level) const;
  int branching_factor() const;
  int leaf_count() const { return static_cast<int>(level_nodes_.back().size()); }

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> level_nodes_;
  friend struct PointTrieBuilder;
};

struct PointTrieResult {
  PointTrie trie;
  std::uint64_t comparisons = 0;
};

/// Incremental construction: each tuple is inserted by walking from the
/// root and comparing its next coordinate against one representative per
/// existing child edge.
PointTrieResult build_point_trie(const TupleSet& tuples);

/// Maximal out-degree over all vertices.
int branching_factor(const PointTrie& trie);

}  // namespace qb
