// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/field.hpp"

namespace qb {

bool is_prime_word(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > 0xFFFFFFFFull)
    fail(Errc::NotPrime, std::to_string(p) + " exceeds the supported 32-bit modulus range");
  if (!is_prime_word(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
}

Fp Fp::inv() const {
  if (p_ < 2) fail(Errc::FieldMismatch, "inverse in an uninitialized field");
  if (v_ == 0) fail(Errc::DivisionByZero, "inverse of 0 in Z_" + std::to_string(p_));
  ++op_counts().inv;
  std::int64_t a = static_cast<std::int64_t>(v_);
  std::int64_t b = static_cast<std::int64_t>(p_);
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  // a == gcd == 1 since p is prime and v_ != 0
  std::int64_t r = x0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return from_raw(static_cast<std::uint64_t>(r), p_);
}

}  // namespace qb
