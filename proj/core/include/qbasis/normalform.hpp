// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <vector>

#include "qbasis/bases.hpp"

namespace qb {

struct NormalFormResult {
  std::vector<Fp> coefficients;  // coordinates w.r.t. the basis elements
  Polynomial polynomial;         // sum coefficients[i] * elements[i]
};

/// Separators from an arbitrary basis: row i of bp_inv against the basis
/// elements gives a polynomial that is 1 on point i and 0 elsewhere.
std::vector<Polynomial> separators_from_basis(const Basis& basis, const PointSet& points);

/// Normal form of f: evaluate f on the points, then one transposed
/// matrix-vector product with the cached inverse.
NormalFormResult normal_form(const Polynomial& f, const Basis& basis, const PointSet& points);

/// Normal form straight from an evaluation vector (one value per point).
NormalFormResult nf_from_values(const std::vector<Fp>& values, const Basis& basis);

/// Shortcut for separator bases: the evaluations themselves are the
/// coefficients, no matrix product involved.
NormalFormResult nf_separator_fastpath(const Polynomial& f, const Basis& basis,
                                       const PointSet& points);

}  // namespace qb
