// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/grn.hpp"

#include <algorithm>
#include <numeric>

namespace qb {

std::vector<std::vector<std::int64_t>> discretize(const TimeSeries& series, std::uint64_t p) {
  if (!is_prime_word(p))
    fail(Errc::NonPrimeStates, "state count " + std::to_string(p) + " is not prime");
  const std::size_t rows = series.samples.size();
  if (rows < 2) fail(Errc::RaggedInput, "a time series needs at least two samples");
  const std::size_t n = series.samples[0].size();
  for (const auto& s : series.samples)
    if (s.size() != n) fail(Errc::RaggedInput, "samples have inconsistent widths");

  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    bool constant = true;
    for (std::size_t i = 1; i < rows && constant; ++i)
      constant = series.samples[i][j] == series.samples[0][j];
    if (constant) continue;  // single state 0

    std::vector<std::size_t> idx(rows);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (series.samples[a][j] != series.samples[b][j])
        return series.samples[a][j] < series.samples[b][j];
      return a < b;
    });
    for (std::size_t rank = 0; rank < rows; ++rank) {
      std::uint64_t state = rank * p / rows;
      out[idx[rank]][j] = static_cast<std::int64_t>(state);
    }
  }
  return out;
}

namespace {

Basis build_basis(const PointSet& domain, const GrnOptions& opt) {
  switch (opt.basis) {
    case BasisChoice::LexMonomial:
      return lex_monomial_basis(domain);
    case BasisChoice::Separator:
      return separator_basis(domain);
    case BasisChoice::LinearPower:
      if (opt.randomized) {
        RealizationDraw draw = randomized_realization(domain, opt.seed);
        return linear_power_basis_from(domain, draw.coordinates, draw.coefficients);
      }
      return linear_power_basis(domain, opt.force);
    case BasisChoice::SeparatorMap: {
      std::vector<Fp> values;
      if (opt.map_values) {
        for (std::int64_t v : *opt.map_values) values.push_back(domain.field().element(v));
      } else {
        for (int i = 0; i < domain.count(); ++i) values.push_back(domain.field().element(i));
      }
      return separator_map_basis(domain, values);
    }
    case BasisChoice::ElimMonomial: {
      std::vector<int> tau;
      if (opt.tau) {
        tau = *opt.tau;
      } else {
        tau.resize(static_cast<std::size_t>(domain.dimension()));
        std::iota(tau.begin(), tau.end(), 0);
      }
      return elimination_standard_monomials(domain, tau, opt.elim_order2).basis;
    }
  }
  fail(Errc::NotApplicable, "unknown basis choice");
}

}  // namespace

GRNModel transition_functions(const std::vector<std::vector<std::int64_t>>& discrete_samples,
                              const PrimeField& field, const GrnOptions& options) {
  if (discrete_samples.size() < 2)
    fail(Errc::DuplicateCollapseEmpty, "need at least two samples, i.e. one transition");
  const int m = static_cast<int>(discrete_samples.size()) - 1;  // transitions
  PointSet all(field, discrete_samples);
  const int n = all.dimension();

  GrnCounters counters;

  // duplicate detection over all m+1 samples
  WitnessData wd = sigma_algorithm(TupleSet(all.integer_rows()));
  counters.comparisons += wd.comparisons;

  std::vector<std::pair<int, int>> duplicate_pairs;
  std::vector<int> rep(static_cast<std::size_t>(m) + 1);
  for (const auto& cls : wd.sigma_at(wd.stop_level).classes()) {
    for (std::size_t k = 0; k < cls.size(); ++k) {
      rep[static_cast<std::size_t>(cls[k])] = cls[0];
      if (k > 0) duplicate_pairs.emplace_back(cls[0] + 1, cls[k] + 1);
    }
  }

  // collapse repeated domain states; successors must agree (checked via the
  // equivalence classes, no further coordinate comparisons needed)
  std::vector<int> kept;
  for (int j = 0; j < m; ++j) {
    if (rep[static_cast<std::size_t>(j)] == j) {
      kept.push_back(j);
    } else {
      const int k = rep[static_cast<std::size_t>(j)];
      if (rep[static_cast<std::size_t>(j + 1)] != rep[static_cast<std::size_t>(k + 1)])
        fail(Errc::InconsistentData,
             "states " + std::to_string(k + 1) + " and " + std::to_string(j + 1) +
                 " are equal but have different successors");
    }
  }
  if (kept.empty()) fail(Errc::DuplicateCollapseEmpty, "no distinct domain state remains");

  std::vector<std::vector<std::int64_t>> domain_rows;
  domain_rows.reserve(kept.size());
  const auto raw = all.integer_rows();
  for (int j : kept) domain_rows.push_back(raw[static_cast<std::size_t>(j)]);
  PointSet domain(field, domain_rows);

  OpDelta core_ops;
  Basis basis = build_basis(domain, options);
  counters.ops_core = core_ops.delta().arithmetic();
  counters.comparisons += basis.provenance.comparisons;

  OpDelta model_ops;
  std::vector<NormalFormResult> transitions;
  transitions.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Fp> successors;
    successors.reserve(kept.size());
    for (int j : kept) successors.push_back(all.at(j + 1, i));
    transitions.push_back(nf_from_values(successors, basis));
  }
  counters.ops_model = model_ops.delta().arithmetic();

  GRNModel model{field.modulus(),
                 std::move(domain),
                 {},
                 std::move(duplicate_pairs),
                 std::move(basis),
                 std::move(transitions),
                 counters};
  model.kept_samples.reserve(kept.size());
  for (int j : kept) model.kept_samples.push_back(j + 1);
  return model;
}

GRNModel reverse_engineer(const TimeSeries& series, std::uint64_t p, const GrnOptions& options,
                          bool no_discretize) {
  PrimeField field = [&] {
    if (!is_prime_word(p))
      fail(Errc::NonPrimeStates, "state count " + std::to_string(p) + " is not prime");
    return PrimeField(p);
  }();
  std::vector<std::vector<std::int64_t>> discrete;
  if (no_discretize) {
    discrete.reserve(series.samples.size());
    for (const auto& row : series.samples) {
      std::vector<std::int64_t> r;
      r.reserve(row.size());
      for (double v : row) r.push_back(static_cast<std::int64_t>(v));
      discrete.push_back(std::move(r));
    }
  } else {
    discrete = discretize(series, p);
  }
  return transition_functions(discrete, field, options);
}

}  // namespace qb
