// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/preprocess.hpp"

#include <algorithm>
#include <numeric>

namespace qb {

TupleSet::TupleSet(std::vector<Tuple> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) fail(Errc::RaggedInput, "tuple set must contain at least one tuple");
  n_ = static_cast<int>(rows_[0].size());
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) != n_)
      fail(Errc::RaggedInput, "tuples have inconsistent lengths");
}

TupleSet TupleSet::reversed() const {
  std::vector<Tuple> rev = rows_;
  for (auto& r : rev) std::reverse(r.begin(), r.end());
  return TupleSet(std::move(rev));
}

Partition Partition::of_classes(std::vector<std::vector<int>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition p;
  p.classes_ = std::move(classes);
  return p;
}

Partition Partition::whole(int m) {
  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  Partition p;
  p.classes_.push_back(std::move(all));
  return p;
}

Partition Partition::singletons(int m) {
  Partition p;
  p.classes_.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p.classes_.push_back({i});
  return p;
}

int Partition::element_count() const {
  int c = 0;
  for (const auto& cls : classes_) c += static_cast<int>(cls.size());
  return c;
}

bool Partition::all_singletons() const {
  return std::all_of(classes_.begin(), classes_.end(),
                     [](const auto& c) { return c.size() == 1; });
}

std::vector<int> Partition::class_ids() const {
  std::vector<int> ids(static_cast<std::size_t>(element_count()), -1);
  for (std::size_t k = 0; k < classes_.size(); ++k)
    for (int i : classes_[k]) ids[static_cast<std::size_t>(i)] = static_cast<int>(k);
  return ids;
}

bool Partition::refines(const Partition& coarser) const {
  std::vector<int> ids = coarser.class_ids();
  for (const auto& cls : classes_) {
    for (std::size_t k = 1; k < cls.size(); ++k)
      if (ids[static_cast<std::size_t>(cls[k])] != ids[static_cast<std::size_t>(cls[0])])
        return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    out += k ? ",{" : "{";
    for (std::size_t i = 0; i < classes_[k].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(classes_[k][i] + 1);
    }
    out += '}';
  }
  out += '}';
  return out;
}

Partition type_of(const Tuple& values) {
  std::map<std::int64_t, std::vector<int>> groups;
  for (std::size_t i = 0; i < values.size(); ++i)
    groups[values[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> classes;
  classes.reserve(groups.size());
  for (auto& [v, idx] : groups) classes.push_back(std::move(idx));
  return Partition::of_classes(std::move(classes));
}

int witness(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "tuple lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return static_cast<int>(i) + 1;
  return 0;
}

WitnessMatrix::WitnessMatrix(int m, int dense_cap) : m_(m), dense_(m <= dense_cap) {
  if (dense_ && m_ > 1)
    dense_data_.assign(static_cast<std::size_t>(m_) * (m_ - 1) / 2, 0);
}

std::size_t WitnessMatrix::index(int i, int j) const {
  // packed upper triangle, row i holds m-1-i entries
  std::size_t mi = static_cast<std::size_t>(i);
  return mi * static_cast<std::size_t>(m_) - mi * (mi + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

int WitnessMatrix::get(int i, int j) const {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  if (dense_) return dense_data_[index(i, j)];
  auto it = sparse_.find({i, j});
  return it == sparse_.end() ? 0 : it->second;
}

void WitnessMatrix::set_pair(int i, int j, int w) {
  if (i > j) std::swap(i, j);
  if (dense_)
    dense_data_[index(i, j)] = static_cast<std::int32_t>(w);
  else
    sparse_[{i, j}] = static_cast<std::int32_t>(w);
}

std::vector<int> WitnessMatrix::upper_triangle_row_major() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m_) * (m_ > 0 ? m_ - 1 : 0) / 2);
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) out.push_back(get(i, j));
  return out;
}

bool WitnessMatrix::operator==(const WitnessMatrix& o) const {
  if (m_ != o.m_) return false;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (get(i, j) != o.get(i, j)) return false;
  return true;
}

const Partition& WitnessData::sigma_at(int level) const {
  if (level < 0) level = 0;
  if (level > stop_level) level = stop_level;
  return sigma_levels[static_cast<std::size_t>(level)];
}

WitnessData sigma_algorithm(const TupleSet& tuples, int dense_cap) {
  const int m = tuples.count();
  const int n = tuples.length();

  WitnessData out;
  out.m = m;
  out.n = n;
  out.matrix = WitnessMatrix(m, dense_cap);
  out.branching = 1;
  out.sigma_levels.push_back(Partition::whole(m));

  std::vector<std::vector<int>> classes = {out.sigma_levels[0].classes()[0]};
  int level = 0;
  while (level < n && !out.sigma_levels.back().all_singletons()) {
    const int coord = level;  // splitting on coordinate level+1 (1-based)
    bool any_split = false;
    std::vector<std::vector<int>> next;
    next.reserve(classes.size());
    for (const auto& cls : classes) {
      if (cls.size() == 1) {
        next.push_back(cls);
        continue;
      }
      // Split chain: compare every member against the class's first
      // element at this coordinate, then re-process the disagreeing part
      // at the same coordinate.
      int groups = 0;
      std::vector<int> work = cls;
      while (!work.empty()) {
        const int rep = work.front();
        const std::int64_t rep_value = tuples.at(rep, coord);
        std::vector<int> agree{rep}, disagree;
        for (std::size_t k = 1; k < work.size(); ++k) {
          ++out.comparisons;
          if (tuples.at(work[k], coord) != rep_value)
            disagree.push_back(work[k]);
          else
            agree.push_back(work[k]);
        }
        for (int a : agree)
          for (int b : disagree) out.matrix.set_pair(a, b, coord + 1);
        next.push_back(std::move(agree));
        ++groups;
        if (disagree.size() == 1) {
          next.push_back(std::move(disagree));
          ++groups;
          work.clear();
        } else {
          work = std::move(disagree);
        }
      }
      if (groups > 1) any_split = true;
      out.branching = std::max(out.branching, groups);
    }
    classes = std::move(next);
    ++level;
    out.sigma_levels.push_back(Partition::of_classes(classes));
    // canonical class listing keeps the representative-first invariant
    classes = out.sigma_levels.back().classes();
    if (any_split) out.witness_list.push_back(level);
  }
  out.stop_level = level;
  out.distinct_count = out.sigma_levels.back().class_count();
  return out;
}

SortedSigmaResult sigma_algorithm_sorted(const TupleSet& tuples, bool presorted, int dense_cap) {
  const int m = tuples.count();
  const int n = tuples.length();

  SortedSigmaResult res;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  if (!presorted) {
    auto lex_less = [&](int a, int b) {
      for (int j = 0; j < n; ++j) {
        ++res.sort_comparisons;
        if (tuples.at(a, j) != tuples.at(b, j)) return tuples.at(a, j) < tuples.at(b, j);
      }
      return false;
    };
    std::stable_sort(perm.begin(), perm.end(), lex_less);
  }

  WitnessData& out = res.data;
  out.m = m;
  out.n = n;
  out.matrix = WitnessMatrix(m, dense_cap);
  out.branching = 1;
  out.sigma_levels.push_back(Partition::whole(m));

  // classes as contiguous runs [lo, hi) over perm
  std::vector<std::pair<int, int>> runs = {{0, m}};
  int level = 0;
  while (level < n && !out.sigma_levels.back().all_singletons()) {
    const int coord = level;
    bool any_split = false;
    std::vector<std::pair<int, int>> next;
    next.reserve(runs.size());
    for (auto [lo, hi] : runs) {
      if (hi - lo == 1) {
        next.emplace_back(lo, hi);
        continue;
      }
      int groups = 0;
      int start = lo;
      std::vector<std::pair<int, int>> subruns;
      for (int k = lo; k + 1 < hi; ++k) {
        ++res.scan_comparisons;
        if (tuples.at(perm[static_cast<std::size_t>(k)], coord) !=
            tuples.at(perm[static_cast<std::size_t>(k + 1)], coord)) {
          subruns.emplace_back(start, k + 1);
          start = k + 1;
        }
      }
      subruns.emplace_back(start, hi);
      groups = static_cast<int>(subruns.size());
      if (groups > 1) {
        any_split = true;
        for (std::size_t a = 0; a < subruns.size(); ++a)
          for (std::size_t b = a + 1; b < subruns.size(); ++b)
            for (int i = subruns[a].first; i < subruns[a].second; ++i)
              for (int j = subruns[b].first; j < subruns[b].second; ++j)
                out.matrix.set_pair(perm[static_cast<std::size_t>(i)],
                                    perm[static_cast<std::size_t>(j)], coord + 1);
      }
      out.branching = std::max(out.branching, groups);
      for (auto r : subruns) next.push_back(r);
    }
    runs = std::move(next);
    ++level;
    std::vector<std::vector<int>> classes;
    classes.reserve(runs.size());
    for (auto [lo, hi] : runs) {
      std::vector<int> cls;
      cls.reserve(static_cast<std::size_t>(hi - lo));
      for (int k = lo; k < hi; ++k) cls.push_back(perm[static_cast<std::size_t>(k)]);
      classes.push_back(std::move(cls));
    }
    out.sigma_levels.push_back(Partition::of_classes(std::move(classes)));
    if (any_split) out.witness_list.push_back(level);
  }
  out.stop_level = level;
  out.distinct_count = out.sigma_levels.back().class_count();
  out.comparisons = res.sort_comparisons + res.scan_comparisons;
  return res;
}

struct PointTrieBuilder {
  PointTrie trie;

  explicit PointTrieBuilder(int n) {
    PointTrie::Node root;
    trie.nodes_.push_back(root);
    trie.level_nodes_.assign(static_cast<std::size_t>(n) + 1, {});
    trie.level_nodes_[0].push_back(0);
  }

  int add_node(int parent, int level, std::int64_t edge_value) {
    PointTrie::Node nd;
    nd.level = level;
    nd.parent = parent;
    nd.edge_value = edge_value;
    int id = static_cast<int>(trie.nodes_.size());
    trie.nodes_.push_back(nd);
    trie.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
    trie.level_nodes_[static_cast<std::size_t>(level)].push_back(id);
    return id;
  }

  PointTrie::Node& node(int id) { return trie.nodes_[static_cast<std::size_t>(id)]; }
};

PointTrieResult build_point_trie(const TupleSet& tuples) {
  const int m = tuples.count();
  const int n = tuples.length();
  PointTrieBuilder b(n);
  PointTrieResult res;

  for (int i = 0; i < m; ++i) {
    int cur = b.trie.root();
    b.node(cur).members.push_back(i);
    int level = 1;
    for (; level <= n; ++level) {
      const std::int64_t value = tuples.at(i, level - 1);
      int found = -1;
      for (int child : b.node(cur).children) {
        ++res.comparisons;
        if (b.node(child).edge_value == value) {
          found = child;
          break;
        }
      }
      if (found < 0) break;
      cur = found;
      b.node(cur).members.push_back(i);
    }
    // fresh branch for the remaining coordinates, no comparisons needed
    for (; level <= n; ++level) {
      cur = b.add_node(cur, level, tuples.at(i, level - 1));
      b.node(cur).members.push_back(i);
    }
  }
  res.trie = std::move(b.trie);
  return res;
}

Partition PointTrie::level_partition(int level) const {
  std::vector<std::vector<int>> classes;
  classes.reserve(level_nodes(level).size());
  for (int id : level_nodes(level)) classes.push_back(node(id).members);
  return Partition::of_classes(std::move(classes));
}

int PointTrie::branching_factor() const {
  int r = 0;
  for (const auto& nd : nodes_) r = std::max(r, static_cast<int>(nd.children.size()));
  return r;
}

int branching_factor(const PointTrie& trie) { return trie.branching_factor(); }

}  // namespace qb
