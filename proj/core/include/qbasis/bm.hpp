// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <vector>

#include "qbasis/points.hpp"
#include "qbasis/poly.hpp"

namespace qb {

struct GroebnerResult {
  std::vector<Polynomial> groebner;       // reduced, ascending leading monomials
  std::vector<Monomial> standard_monomials;  // ascending in the order
  MonomialOrder order;
};

/// Evaluation-based computation of the reduced Groebner basis of the
/// vanishing ideal and of its standard monomials: candidates are processed
/// in ascending order, accepted while their evaluation vectors stay
/// linearly independent, and every dependency yields one reduced basis
/// element.
GroebnerResult buchberger_moller(const PointSet& points, const MonomialOrder& order);

}  // namespace qb
