// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qbasis/field.hpp"

namespace qb {

using Exponents = std::vector<std::uint32_t>;

/// A power product of the ambient variables, stored as one exponent per
/// variable slot.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Exponents e) : e_(std::move(e)) {}
  static Monomial one(int nvars) { return Monomial(Exponents(nvars, 0)); }
  static Monomial variable(int index, int nvars, std::uint32_t power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  std::uint32_t exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
  const Exponents& exponents() const { return e_; }
  std::uint64_t degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide_by(const Monomial& o) const;  // requires o.divides(*this)

  Fp evaluate(std::span<const Fp> point) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  bool operator<(const Monomial& o) const { return e_ < o.e_; }  // internal order only

  std::string to_string() const;  // "x1^2*x3", "1" for the empty product

 private:
  Exponents e_;
};

enum class OrderKind { Lex, DegRevLex, Block };

/// An admissible monomial order: plain lexicographic or degree reverse
/// lexicographic over a variable priority list, or a two-block order that
/// compares the second block's order first and breaks ties with the first.
class MonomialOrder {
 public:
  /// Placeholder that sees no variables; replace before use.
  MonomialOrder() = default;

  /// `priority` lists 0-based variable indices from most to least
  /// significant.
  static MonomialOrder lex(std::vector<int> priority);
  static MonomialOrder degrevlex(std::vector<int> priority);
  /// Standard full orders x1 > x2 > ... > xn.
  static MonomialOrder lex_standard(int nvars);
  static MonomialOrder degrevlex_standard(int nvars);
  /// Block order built from `first` (on block A) and `second` (on block B);
  /// monomials are compared by `second` on their B-part and ties are broken
  /// by `first` on the A-part, so A becomes the eliminated block.
  static MonomialOrder block(MonomialOrder first, MonomialOrder second);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& priority() const { return priority_; }
  const MonomialOrder& block_first() const { return parts_[0]; }
  const MonomialOrder& block_second() const { return parts_[1]; }

  /// -1 if u < v, 0 if equal on the variables the order sees, +1 if u > v.
  int compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

  std::string to_string() const;

 private:
  OrderKind kind_ = OrderKind::Lex;
  std::vector<int> priority_;
  std::vector<MonomialOrder> parts_;
};

/// A sparse multivariate polynomial over Z_p. Terms are keyed by exponent
/// vector under a fixed internal order, independent of any user-selected
/// monomial order, so structural equality is cheap.
class Polynomial {
 public:
  Polynomial() : nvars_(0), p_(0) {}
  static Polynomial zero(int nvars, const PrimeField& field);
  static Polynomial zero(int nvars, std::uint64_t p);
  static Polynomial constant(Fp value, int nvars);
  static Polynomial variable(int index, int nvars, const PrimeField& field);
  static Polynomial term(const Monomial& m, Fp coeff);

  int nvars() const { return nvars_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint64_t degree() const;  // 0 for the zero polynomial

  Fp coeff(const Monomial& m) const;
  const std::map<Exponents, Fp>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(Fp c) const;
  Polynomial pow(std::uint32_t k) const;

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && p_ == o.p_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Exact evaluation; monomial powers are accumulated by repeated
  /// multiplication, so the cost is proportional to terms x degree.
  Fp evaluate(std::span<const Fp> point) const;
  Fp evaluate(const std::vector<Fp>& point) const { return evaluate(std::span<const Fp>(point)); }

  Monomial leading_monomial(const MonomialOrder& order) const;

  /// Serialization in the grammar "c*x1^a1*x2^a2+...". Terms are listed in
  /// descending order of `order` when given, else of the internal order.
  std::string to_string(const MonomialOrder* order = nullptr) const;

 private:
  void add_term(const Exponents& e, Fp c);
  std::map<Exponents, Fp> terms_;
  int nvars_;
  std::uint64_t p_;

  friend Polynomial parse_polynomial(const std::string&, int, const PrimeField&);
};

/// Parses the textual polynomial grammar. Variables are written x1..xn;
/// coefficients are integers (negatives allowed, reduced mod p).
Polynomial parse_polynomial(const std::string& text, int nvars, const PrimeField& field);

}  // namespace qb
