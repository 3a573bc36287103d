// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qb {

Monomial Monomial::variable(int index, int nvars, std::uint32_t power) {
  Exponents e(nvars, 0);
  e.at(static_cast<std::size_t>(index)) = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e_.size() != o.e_.size()) fail(Errc::DimensionMismatch, "monomial variable counts differ");
  Exponents r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() != o.e_.size()) fail(Errc::DimensionMismatch, "monomial variable counts differ");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  Exponents r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
  return Monomial(std::move(r));
}

Fp Monomial::evaluate(std::span<const Fp> point) const {
  if (point.size() != e_.size()) fail(Errc::DimensionMismatch, "point length != variable count");
  if (point.empty()) fail(Errc::DimensionMismatch, "evaluation over an empty point");
  Fp acc = Fp::from_raw(1 % point[0].modulus(), point[0].modulus());
  for (std::size_t i = 0; i < e_.size(); ++i)
    for (std::uint32_t k = 0; k < e_[i]; ++k) acc *= point[i];
  return acc;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e_[i] > 1) {
      out += '^';
      out += std::to_string(e_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
  MonomialOrder o;
  o.kind_ = OrderKind::Lex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<int> priority) {
  MonomialOrder o;
  o.kind_ = OrderKind::DegRevLex;
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::lex_standard(int nvars) {
  std::vector<int> pr(nvars);
  std::iota(pr.begin(), pr.end(), 0);
  return lex(std::move(pr));
}

MonomialOrder MonomialOrder::degrevlex_standard(int nvars) {
  std::vector<int> pr(nvars);
  std::iota(pr.begin(), pr.end(), 0);
  return degrevlex(std::move(pr));
}

MonomialOrder MonomialOrder::block(MonomialOrder first, MonomialOrder second) {
  MonomialOrder o;
  o.kind_ = OrderKind::Block;
  o.parts_.push_back(std::move(first));
  o.parts_.push_back(std::move(second));
  return o;
}

int MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.nvars() != v.nvars()) fail(Errc::DimensionMismatch, "monomial variable counts differ");
  switch (kind_) {
    case OrderKind::Lex:
      for (int var : priority_) {
        std::uint32_t a = u.exponent(var), b = v.exponent(var);
        if (a != b) return a > b ? 1 : -1;
      }
      return 0;
    case OrderKind::DegRevLex: {
      std::uint64_t du = 0, dv = 0;
      for (int var : priority_) {
        du += u.exponent(var);
        dv += v.exponent(var);
      }
      if (du != dv) return du > dv ? 1 : -1;
      // equal degree: the last differing exponent decides, smaller wins
      for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
        std::uint32_t a = u.exponent(*it), b = v.exponent(*it);
        if (a != b) return a < b ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::Block: {
      int second = parts_[1].compare(u, v);
      if (second != 0) return second;
      return parts_[0].compare(u, v);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  auto vars = [](const std::vector<int>& pr) {
    std::string s;
    for (std::size_t i = 0; i < pr.size(); ++i) {
      if (i) s += '>';
      s += 'x';
      s += std::to_string(pr[i] + 1);
    }
    return s;
  };
  switch (kind_) {
    case OrderKind::Lex: return "lex:" + vars(priority_);
    case OrderKind::DegRevLex: return "degrevlex:" + vars(priority_);
    case OrderKind::Block:
      return "block:(" + parts_[0].to_string() + ");(" + parts_[1].to_string() + ")";
  }
  return "";
}

Polynomial Polynomial::zero(int nvars, const PrimeField& field) {
  return zero(nvars, field.modulus());
}

Polynomial Polynomial::zero(int nvars, std::uint64_t p) {
  Polynomial f;
  f.nvars_ = nvars;
  f.p_ = p;
  return f;
}

Polynomial Polynomial::constant(Fp value, int nvars) {
  Polynomial f = zero(nvars, value.modulus());
  if (!value.is_zero()) f.terms_.emplace(Exponents(nvars, 0), value);
  return f;
}

Polynomial Polynomial::variable(int index, int nvars, const PrimeField& field) {
  return term(Monomial::variable(index, nvars), field.one());
}

Polynomial Polynomial::term(const Monomial& m, Fp coeff) {
  Polynomial f = zero(m.nvars(), coeff.modulus());
  if (!coeff.is_zero()) f.terms_.emplace(m.exponents(), coeff);
  return f;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
  return d;
}

Fp Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m.exponents());
  return it == terms_.end() ? Fp::from_raw(0, p_) : it->second;
}

void Polynomial::add_term(const Exponents& e, Fp c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) fail(Errc::DimensionMismatch, "polynomial variable counts differ");
  if (p_ != o.p_) fail(Errc::FieldMismatch, "polynomial coefficient fields differ");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = zero(nvars_, p_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::scale(Fp c) const {
  Polynomial r = zero(nvars_, p_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) {
    Fp prod = a * c;
    if (!prod.is_zero()) r.terms_.emplace(e, prod);
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) fail(Errc::DimensionMismatch, "polynomial variable counts differ");
  if (p_ != o.p_) fail(Errc::FieldMismatch, "polynomial coefficient fields differ");
  Polynomial r = zero(nvars_, p_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[static_cast<std::size_t>(i)] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial r = constant(Fp::from_raw(1 % p_, p_), nvars_);
  for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

Fp Polynomial::evaluate(std::span<const Fp> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    fail(Errc::DimensionMismatch, "point length != variable count");
  Fp acc = Fp::from_raw(0, p_);
  for (const auto& [e, c] : terms_) {
    Fp t = c;
    for (int i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) fail(Errc::NotApplicable, "leading monomial of the zero polynomial");
  Monomial best(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    Monomial m(e);
    if (order.compare(m, best) > 0) best = m;
  }
  return best;
}

std::string Polynomial::to_string(const MonomialOrder* order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Fp>> list;
  list.reserve(terms_.size());
  for (const auto& [e, c] : terms_) list.emplace_back(Monomial(e), c);
  if (order != nullptr) {
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      return order->compare(a.first, b.first) > 0;
    });
  } else {
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
  }
  std::string out;
  for (const auto& [m, c] : list) {
    if (!out.empty()) out += '+';
    if (m.is_one()) {
      out += std::to_string(c.value());
    } else if (c.value() == 1) {
      out += m.to_string();
    } else {
      out += std::to_string(c.value());
      out += '*';
      out += m.to_string();
    }
  }
  return out;
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::uint64_t integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail(Errc::ParseError, "expected integer at position " + std::to_string(pos) + " in '" + s + "'");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (1ull << 62)) fail(Errc::ParseError, "integer literal too large");
      ++pos;
    }
    return v;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, const PrimeField& field) {
  PolyLexer lx{text};
  if (lx.eof()) fail(Errc::ParseError, "empty polynomial expression");
  Polynomial result = Polynomial::zero(nvars, field);
  bool first = true;
  while (!lx.eof()) {
    bool negative = false;
    if (!first || lx.peek() == '+' || lx.peek() == '-') {
      if (lx.accept('+')) {
        negative = false;
      } else if (lx.accept('-')) {
        negative = true;
      } else if (!first) {
        fail(Errc::ParseError, "expected '+' or '-' at position " + std::to_string(lx.pos));
      }
    }
    first = false;

    Fp coeff = field.one();
    Exponents e(nvars, 0);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coeff = field.element(static_cast<std::int64_t>(lx.integer() % field.modulus()));
      saw_factor = true;
      if (!lx.accept('*')) {
        // plain constant term
        result += Polynomial::constant(negative ? -coeff : coeff, nvars);
        continue;
      }
    }
    do {
      if (lx.peek() != 'x')
        fail(Errc::ParseError, "expected variable at position " + std::to_string(lx.pos) + " in '" +
                                   text + "'");
      lx.accept('x');
      std::uint64_t idx = lx.integer();
      if (idx < 1 || idx > static_cast<std::uint64_t>(nvars))
        fail(Errc::ParseError, "variable x" + std::to_string(idx) + " outside x1..x" +
                                   std::to_string(nvars));
      std::uint64_t power = 1;
      if (lx.accept('^')) power = lx.integer();
      e[idx - 1] += static_cast<std::uint32_t>(power);
      saw_factor = true;
    } while (lx.accept('*'));
    if (!saw_factor) fail(Errc::ParseError, "empty term in '" + text + "'");
    result += Polynomial::term(Monomial(e), negative ? -coeff : coeff);
  }
  return result;
}

}  // namespace qb
