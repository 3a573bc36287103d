// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbasis/bases.hpp"
#include "qbasis/normalform.hpp"

namespace qb {

/// A discretizable time series: m+1 samples of n real-valued variables.
struct TimeSeries {
  std::vector<std::vector<double>> samples;
  std::vector<std::string> labels;  // optional, one per variable
};

/// Per-variable quantile binning into p states: values are sorted (ties
/// broken by value then sample index) and split into p equal-count groups.
/// A constant variable collapses into the single state 0.
std::vector<std::vector<std::int64_t>> discretize(const TimeSeries& series, std::uint64_t p);

enum class BasisChoice { LexMonomial, Separator, LinearPower, SeparatorMap, ElimMonomial };

struct GrnOptions {
  BasisChoice basis = BasisChoice::LexMonomial;
  std::optional<std::vector<int>> tau;  // 0-based; identity when absent
  OrderKind elim_order2 = OrderKind::DegRevLex;
  std::optional<std::vector<std::int64_t>> map_values;  // SeparatorMap; defaults to 0..m-1
  bool randomized = false;                              // LinearPower via random coefficients
  std::uint64_t seed = 0;
  bool force = false;
};

struct GrnCounters {
  std::uint64_t comparisons = 0;  // alphabet comparisons (duplicate scan + basis combinatorics)
  std::uint64_t ops_core = 0;     // field ops to set up the basis: B(P) and its inverse
  std::uint64_t ops_model = 0;    // field ops for the per-variable coefficient products
};

/// Transition polynomials of a discrete dynamical system in normal form
/// with respect to the chosen basis.
struct GRNModel {
  std::uint64_t prime = 0;
  PointSet domain;                    // distinct domain states, in first-seen order
  std::vector<int> kept_samples;      // 1-based sample indices of the domain states
  std::vector<std::pair<int, int>> duplicate_pairs;  // 1-based equal-sample pairs
  Basis basis;
  std::vector<NormalFormResult> transitions;  // h_1..h_n
  GrnCounters counters;
};

/// Core step: detect duplicate states, collapse consistently repeated
/// domain states, build the chosen basis over the distinct domain points
/// and express every transition function in it.
GRNModel transition_functions(const std::vector<std::vector<std::int64_t>>& discrete_samples,
                              const PrimeField& field, const GrnOptions& options = {});

/// Full pipeline: discretize (unless told not to), then transition_functions.
GRNModel reverse_engineer(const TimeSeries& series, std::uint64_t p,
                          const GrnOptions& options = {}, bool no_discretize = false);

}  // namespace qb
