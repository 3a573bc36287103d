// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "qbasis/normalform.hpp"

namespace qb {

std::vector<Polynomial> separators_from_basis(const Basis& basis, const PointSet& points) {
  const int m = basis.size();
  if (m != points.count()) fail(Errc::DimensionMismatch, "basis size != point count");
  std::vector<Polynomial> seps;
  seps.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Polynomial f = Polynomial::zero(basis.nvars(), basis.modulus());
    for (int k = 0; k < m; ++k) {
      Fp c = basis.bp_inv.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
      if (!c.is_zero()) f += basis.elements[static_cast<std::size_t>(k)].scale(c);
    }
    seps.push_back(std::move(f));
  }
  return seps;
}

NormalFormResult nf_from_values(const std::vector<Fp>& values, const Basis& basis) {
  const int m = basis.size();
  if (static_cast<int>(values.size()) != m)
    fail(Errc::DimensionMismatch, "one value per point expected");
  NormalFormResult res;
  res.coefficients = basis.bp_inv.transpose_mul_vec(values);
  res.polynomial = Polynomial::zero(basis.nvars(), basis.modulus());
  for (int k = 0; k < m; ++k) {
    if (!res.coefficients[static_cast<std::size_t>(k)].is_zero())
      res.polynomial +=
          basis.elements[static_cast<std::size_t>(k)].scale(res.coefficients[static_cast<std::size_t>(k)]);
  }
  return res;
}

NormalFormResult normal_form(const Polynomial& f, const Basis& basis, const PointSet& points) {
  if (f.nvars() != points.dimension())
    fail(Errc::DimensionMismatch, "polynomial variable count != point dimension");
  if (basis.size() != points.count())
    fail(Errc::DimensionMismatch, "basis size != point count");
  if (f.is_zero()) {
    NormalFormResult res;
    res.coefficients.assign(static_cast<std::size_t>(basis.size()),
                            Fp::from_raw(0, basis.modulus()));
    res.polynomial = Polynomial::zero(basis.nvars(), basis.modulus());
    return res;
  }
  std::vector<Fp> values;
  values.reserve(static_cast<std::size_t>(points.count()));
  for (int j = 0; j < points.count(); ++j) values.push_back(f.evaluate(points.row(j)));
  return nf_from_values(values, basis);
}

NormalFormResult nf_separator_fastpath(const Polynomial& f, const Basis& basis,
                                       const PointSet& points) {
  if (basis.kind != BasisKind::Separator)
    fail(Errc::WrongKind, "fast path requires a separator basis");
  NormalFormResult res;
  res.coefficients.reserve(static_cast<std::size_t>(points.count()));
  for (int j = 0; j < points.count(); ++j)
    res.coefficients.push_back(f.evaluate(points.row(j)));
  res.polynomial = Polynomial::zero(basis.nvars(), basis.modulus());
  for (int k = 0; k < basis.size(); ++k)
    if (!res.coefficients[static_cast<std::size_t>(k)].is_zero())
      res.polynomial +=
          basis.elements[static_cast<std::size_t>(k)].scale(res.coefficients[static_cast<std::size_t>(k)]);
  return res;
}

}  // namespace qb
