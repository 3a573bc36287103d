// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbasis/bases.hpp"
#include "qbasis/bm.hpp"
#include "qbasis/grn.hpp"
#include "qbasis/normalform.hpp"
#include "qbasis/preprocess.hpp"

namespace qb {

/// Rectangular integer CSV. An optional first header line is skipped.
std::vector<std::vector<std::int64_t>> read_int_csv(const std::string& path);

/// Real-valued CSV for time series; a header line populates the labels.
TimeSeries read_series_csv(const std::string& path);

/// Order specs: "lex:x1>x2>x3", "degrevlex:x3>x1>x2",
/// "block:(<spec1>);(<spec2>)" (spec2 is compared first), or the bare kind
/// names "lex"/"degrevlex" meaning x1>...>xn.
MonomialOrder parse_order_spec(const std::string& spec, int nvars);

/// Comma-separated integer list, e.g. "8,2,3,4,6,5,7,1".
std::vector<std::int64_t> parse_int_list(const std::string& text);

// JSON reports (stable key order; `pretty` indents by two spaces).
std::string preprocess_report_json(const WitnessData& sigma, const PointTrieResult& trie,
                                   const SortedSigmaResult& sorted, bool pretty);
std::string basis_json(const Basis& basis, bool pretty);
std::string normal_form_json(const NormalFormResult& nf, const MonomialOrder* order, bool pretty);
std::string groebner_json(const GroebnerResult& result, bool pretty);
std::string grn_json(const GRNModel& model, bool counters, bool pretty);

/// Reads a basis back from basis_json output. The evaluation matrices are
/// re-checked against each other.
Basis basis_from_json(const std::string& text, const PrimeField& field, int nvars);

}  // namespace qb
