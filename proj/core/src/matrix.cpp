// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/matrix.hpp"

namespace qb {

FpMatrix FpMatrix::identity(std::size_t n, std::uint64_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Fp::from_raw(1 % p, p);
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) fail(Errc::DimensionMismatch, "matrix product shapes");
  FpMatrix r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Fp a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

std::vector<Fp> FpMatrix::mul_vec(const std::vector<Fp>& v) const {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "matrix-vector shapes");
  std::vector<Fp> r(rows_, Fp::from_raw(0, p_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<Fp> FpMatrix::transpose_mul_vec(const std::vector<Fp>& v) const {
  if (v.size() != rows_) fail(Errc::DimensionMismatch, "matrix-vector shapes");
  std::vector<Fp> r(cols_, Fp::from_raw(0, p_));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) r[j] += at(i, j) * v[i];
  }
  return r;
}

FpMatrix invert(const FpMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const std::uint64_t p = m.modulus();
  FpMatrix a = m;
  FpMatrix inv = FpMatrix::identity(n, p);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(Errc::Singular, "matrix has no inverse (rank deficiency at column " +
                                             std::to_string(col + 1) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Fp scale = a.at(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      Fp factor = a.at(row, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(row, j) -= factor * a.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace qb
