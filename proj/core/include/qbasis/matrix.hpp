// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <vector>

#include "qbasis/field.hpp"

namespace qb {

/// Dense matrix over Z_p.
class FpMatrix {
 public:
  FpMatrix() : rows_(0), cols_(0), p_(0) {}
  FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, Fp::from_raw(0, p)) {}
  FpMatrix(std::size_t rows, std::size_t cols, const PrimeField& f)
      : FpMatrix(rows, cols, f.modulus()) {}

  static FpMatrix identity(std::size_t n, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return p_; }

  Fp& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Fp at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FpMatrix operator*(const FpMatrix& o) const;
  std::vector<Fp> mul_vec(const std::vector<Fp>& v) const;
  /// Returns M^t v without forming the transpose.
  std::vector<Fp> transpose_mul_vec(const std::vector<Fp>& v) const;

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_, cols_;
  std::uint64_t p_;
  std::vector<Fp> data_;
};

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
/// Throws Singular when no inverse exists.
FpMatrix invert(const FpMatrix& m);

}  // namespace qb
