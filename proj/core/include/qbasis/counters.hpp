// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>

namespace qb {

// Running totals of field arithmetic (add/sub, mul, inversions) and of
// order comparisons on field elements. Combinatorial equality tests on
// raw tuples are counted separately by the preprocessing algorithms.
struct OpCounts {
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t inv = 0;
  std::uint64_t cmp = 0;

  std::uint64_t arithmetic() const { return add + mul + inv; }
  std::uint64_t total() const { return arithmetic() + cmp; }

  OpCounts operator-(const OpCounts& o) const {
    return OpCounts{add - o.add, mul - o.mul, inv - o.inv, cmp - o.cmp};
  }
};

inline OpCounts& op_counts() {
  thread_local OpCounts counts;
  return counts;
}

// Snapshot of the thread-local counters; delta() reports what ran since
// construction.
class OpDelta {
 public:
  OpDelta() : start_(op_counts()) {}
  OpCounts delta() const { return op_counts() - start_; }

 private:
  OpCounts start_;
};

}  // namespace qb
