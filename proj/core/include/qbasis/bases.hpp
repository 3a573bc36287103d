// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbasis/matrix.hpp"
#include "qbasis/points.hpp"
#include "qbasis/poly.hpp"
#include "qbasis/preprocess.hpp"

namespace qb {

enum class BasisKind { Separator, LinearPower, SeparatorMapPower, LexMonomial, ElimMonomial };

const char* basis_kind_name(BasisKind k);

/// A separator kept in factored form: scale * prod (x_coord - root)^mult.
struct SeparatorFactored {
  struct Factor {
    int coordinate = 0;  // 0-based variable index
    Fp root;
    int multiplicity = 0;
  };
  Fp scale;
  std::vector<Factor> factors;
  int nvars = 0;

  Polynomial expand(const PrimeField& field) const;
};

/// Construction-specific metadata carried alongside a basis.
struct BasisProvenance {
  std::vector<int> witness_coords;                 // 1-based coordinates used
  std::optional<std::vector<Fp>> coefficients;     // c_h of the linear form / map values
  std::optional<Polynomial> generator;             // the linear form f or the map pi
  std::optional<std::vector<Fp>> point_values;     // f(p_i) resp. pi(p_i)
  std::optional<std::vector<Fp>> univariate_generator;  // coeffs of prod (x - v_i), low to high
  std::vector<SeparatorFactored> separator_factors;
  std::optional<std::vector<int>> tau;             // 0-based coordinate permutation
  std::optional<std::string> order_description;
  std::uint64_t comparisons = 0;                   // alphabet comparisons spent building
};

/// An ordered vector-space basis e_1..e_m of the quotient ring modulo the
/// vanishing ideal of a point set, together with its evaluation matrix and
/// the cached inverse.
struct Basis {
  BasisKind kind = BasisKind::Separator;
  std::vector<Polynomial> elements;
  FpMatrix bp;      // elements evaluated on the points, m x m
  FpMatrix bp_inv;  // its exact inverse
  BasisProvenance provenance;

  int size() const { return static_cast<int>(elements.size()); }
  int nvars() const { return elements.empty() ? 0 : elements[0].nvars(); }
  std::uint64_t modulus() const { return bp.modulus(); }
};

/// Throws DuplicatePoints unless all points are distinct; returns the
/// witness data computed along the way.
WitnessData require_distinct(const PointSet& points);

// -- Construction 1: separators from the witness matrix ----------------------

Basis separator_basis(const PointSet& points);
Basis separator_basis(const PointSet& points, const WitnessData& witness_data);

/// Drops repeated linear factors from a factored separator and rescales so
/// the value at `point` is 1. Throws NotApplicable when the squarefree
/// product vanishes there.
Polynomial reduce_separator(const SeparatorFactored& factored, const std::vector<Fp>& point,
                            const PrimeField& field);

// -- Construction 2: a linear form taking distinct values --------------------

struct DistinctElementStage {
  int coordinate = 0;                     // 1-based
  std::vector<std::pair<int, int>> pairs; // 0-based index pairs, ascending
  std::vector<Fp> taus;                   // forbidden quotients, pair order
  Fp chosen;
};

struct DistinctElementResult {
  std::vector<int> coordinates;  // 1-based witness coordinates used
  std::vector<Fp> coefficients;  // c_1..c_nbar
  std::vector<Fp> realization;   // the resulting m distinct values
  std::vector<DistinctElementStage> stages;
  std::uint64_t operations = 0;  // field arithmetic + ordered comparisons
  std::uint64_t comparisons = 0; // alphabet comparisons of the preprocessing
};

/// Stage-wise choice of coefficients c_h, smallest admissible nonzero
/// value first, so that sum c_h * (column i_h) takes pairwise distinct
/// values. Requires |field| >= m(m-1)/2 + 1 unless `force`.
DistinctElementResult distinct_element_algorithm(const PointSet& points, bool force = false);

/// Evaluates sum c_h * (column coords_h) and reports whether the entries
/// are pairwise distinct; accepts arbitrary user-supplied coefficients.
struct RealizationCheck {
  std::vector<Fp> values;
  bool valid = false;
};
RealizationCheck check_realization(const PointSet& points, const std::vector<int>& coordinates,
                                   const std::vector<Fp>& coefficients);

Basis linear_power_basis(const PointSet& points, bool force = false);
/// Same basis from externally chosen coordinates/coefficients (they must
/// realize distinct values).
Basis linear_power_basis_from(const PointSet& points, const std::vector<int>& coordinates,
                              const std::vector<Fp>& coefficients);

/// Construction 2 via the separator map pi = sum c_i Q_i with prescribed
/// pairwise-distinct values c_i.
Basis separator_map_basis(const PointSet& points, const std::vector<Fp>& values);

struct RealizationDraw {
  std::vector<int> coordinates;
  std::vector<Fp> coefficients;
  Polynomial linear_form;
  int attempts = 0;
};
/// Draws random coefficients over the witness coordinates until the
/// combination takes m distinct values. Throws RetriesExhausted after
/// `max_retries` failed draws.
RealizationDraw randomized_realization(const PointSet& points, std::uint64_t seed,
                                       int max_retries = 64);

// -- Construction 3: lexicographic standard monomials ------------------------

/// The derived tree whose root-to-leaf paths spell the exponent vectors of
/// the lexicographic standard monomials.
class LexTrie {
 public:
  struct Node {
    int level = 0;
    int parent = -1;
    int edge_label = 0;
    std::vector<int> members;
    std::vector<int> children;
  };

  int root() const { return 0; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int levels() const { return static_cast<int>(level_nodes_.size()); }
  const std::vector<int>& level_nodes(int level) const {
    return level_nodes_[static_cast<std::size_t>(level)];
  }
  int leaf_count() const { return static_cast<int>(level_nodes_.back().size()); }
  /// Exponent vectors read off the root-to-leaf paths.
  std::vector<Exponents> paths() const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> level_nodes_;
  friend struct LexTrieBuilder;
};

struct LexMonomialResult {
  std::vector<Monomial> monomials;  // ascending in lex with x1 > ... > xn
  LexTrie trie;
  std::uint64_t comparisons = 0;
};

/// Standard monomials of the vanishing ideal for the lexicographic order
/// x1 > ... > xn, computed purely combinatorially: point trie over the
/// reversed coordinates, then the level-by-level bucket refinement.
LexMonomialResult lex_standard_monomials(const TupleSet& tuples);
LexMonomialResult lex_standard_monomials(const PointSet& points);

Basis lex_monomial_basis(const PointSet& points);

// -- Construction 4: standard monomials for elimination orders ---------------

struct ElimResult {
  std::vector<Monomial> monomials;  // in the ambient n variables
  Basis basis;
  std::vector<int> witness_vars;    // 0-based permuted variable indices, ascending
};

/// Permutes coordinates by tau, finds the witness coordinates scanning the
/// permuted tuples right to left, projects the points onto them, computes
/// standard monomials there (lex trie for lex, otherwise the
/// evaluation-based algorithm in module bm) and lifts the result back.
/// order2 must be Lex or DegRevLex; its priority is the ascending witness
/// variable order.
ElimResult elimination_standard_monomials(const PointSet& points, const std::vector<int>& tau,
                                          OrderKind order2);

}  // namespace qb
