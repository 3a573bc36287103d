// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/points.hpp"

namespace qb {

PointSet::PointSet(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& raw)
    : field_(field) {
  if (raw.empty()) fail(Errc::RaggedInput, "point set must contain at least one point");
  const std::size_t n = raw[0].size();
  rows_.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.size() != n) fail(Errc::RaggedInput, "points have inconsistent coordinate counts");
    std::vector<Fp> row;
    row.reserve(n);
    for (std::int64_t v : r) row.push_back(field_.element(v));
    rows_.push_back(std::move(row));
  }
}

std::vector<std::vector<std::int64_t>> PointSet::integer_rows() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<std::int64_t> r;
    r.reserve(row.size());
    for (Fp v : row) r.push_back(static_cast<std::int64_t>(v.value()));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Fp> PointSet::column(int j) const {
  std::vector<Fp> col;
  col.reserve(rows_.size());
  for (const auto& row : rows_) col.push_back(row[static_cast<std::size_t>(j)]);
  return col;
}

FpMatrix evaluate_matrix(const std::vector<Polynomial>& elements, const PointSet& points) {
  const std::size_t s = elements.size();
  const std::size_t m = static_cast<std::size_t>(points.count());
  FpMatrix out(s, m, points.field().modulus());
  for (std::size_t i = 0; i < s; ++i) {
    if (elements[i].nvars() != points.dimension())
      fail(Errc::DimensionMismatch, "polynomial variable count != point dimension");
    for (std::size_t j = 0; j < m; ++j)
      out.at(i, j) = elements[i].evaluate(points.row(static_cast<int>(j)));
  }
  return out;
}

}  // namespace qb
