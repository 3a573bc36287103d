// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <vector>

#include "qbasis/matrix.hpp"
#include "qbasis/poly.hpp"

namespace qb {

/// A finite list of points in Z_p^n. Entries are canonicalized at
/// construction; duplicates are permitted here (basis constructions check
/// distinctness themselves).
class PointSet {
 public:
  PointSet(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& raw);

  const PrimeField& field() const { return field_; }
  int count() const { return static_cast<int>(rows_.size()); }       // m
  int dimension() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }  // n
  Fp at(int i, int j) const { return rows_[i][static_cast<std::size_t>(j)]; }
  const std::vector<Fp>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  /// Canonical representatives as plain integer tuples, for the
  /// combinatorial preprocessing.
  std::vector<std::vector<std::int64_t>> integer_rows() const;
  /// Column j as field elements.
  std::vector<Fp> column(int j) const;

 private:
  PrimeField field_;
  std::vector<std::vector<Fp>> rows_;
};

/// The s x m matrix whose (i, j) entry is elements[i](points[j]).
FpMatrix evaluate_matrix(const std::vector<Polynomial>& elements, const PointSet& points);

}  // namespace qb
