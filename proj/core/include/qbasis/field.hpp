// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>

#include "qbasis/counters.hpp"
#include "qbasis/errors.hpp"

namespace qb {

bool is_prime_word(std::uint64_t n);

/// An element of Z_p, stored as its canonical representative in [0, p)
/// together with the modulus. The modulus is restricted to 32 bits so
/// that products fit in a single machine word.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::int64_t value, std::uint64_t p) : v_(reduce(value, p)), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const {
    check_same(o);
    ++op_counts().add;
    std::uint64_t s = v_ + o.v_;
    return from_raw(s >= p_ ? s - p_ : s, p_);
  }
  Fp operator-(Fp o) const {
    check_same(o);
    ++op_counts().add;
    return from_raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator*(Fp o) const {
    check_same(o);
    ++op_counts().mul;
    return from_raw((v_ * o.v_) % p_, p_);
  }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }

  /// Multiplicative inverse via the extended Euclidean algorithm.
  Fp inv() const;

  Fp operator/(Fp o) const { return *this * o.inv(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  bool operator==(Fp o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(Fp o) const { return !(*this == o); }

  // Natural total order on canonical representatives; counted as an
  // ordered-field comparison.
  static bool less(Fp a, Fp b) {
    a.check_same(b);
    ++op_counts().cmp;
    return a.v_ < b.v_;
  }

  static Fp from_raw(std::uint64_t canonical, std::uint64_t p) {
    Fp r;
    r.v_ = canonical;
    r.p_ = p;
    return r;
  }

 private:
  static std::uint64_t reduce(std::int64_t value, std::uint64_t p) {
    if (p < 2) fail(Errc::FieldMismatch, "element of an uninitialized field");
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m);
  }
  void check_same(Fp o) const {
    if (p_ != o.p_ || p_ == 0)
      fail(Errc::FieldMismatch, "operands live in Z_" + std::to_string(p_) + " and Z_" +
                                    std::to_string(o.p_));
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

/// The prime field Z_p. Primality is verified at construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Fp element(std::int64_t value) const { return Fp(value, p_); }
  Fp zero() const { return Fp::from_raw(0, p_); }
  Fp one() const { return Fp::from_raw(1 % p_, p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace qb
