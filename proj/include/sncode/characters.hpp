#pragma once

#include "sncode/integer.hpp"
#include "sncode/perm.hpp"

#include <map>
#include <utility>
#include <vector>

namespace sncode {

/// Exact-integer polynomial in x1, x2 stored as (deg x1, deg x2) -> coefficient.
/// Zero coefficients are never stored.
class SparseBivariatePoly {
public:
  using Exponents = std::pair<int, int>;

  SparseBivariatePoly() = default;

  static SparseBivariatePoly constant(Int c);
  static SparseBivariatePoly monomial(Int c, int deg1, int deg2);

  Int coefficient(int deg1, int deg2) const;
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree if every term shares it, otherwise -1. Zero polynomial gives -1.
  int homogeneous_degree() const;

  SparseBivariatePoly& operator+=(const SparseBivariatePoly& rhs);
  friend SparseBivariatePoly operator*(const SparseBivariatePoly& a, const SparseBivariatePoly& b);
  friend bool operator==(const SparseBivariatePoly&, const SparseBivariatePoly&) = default;

private:
  void add_term(Exponents e, Int c);

  std::map<Exponents, Int> terms_;
};

/// (x1 - x2) * prod_l (x1^l + x2^l)^{i_l}, fully expanded.
SparseBivariatePoly frobenius_poly(const CycleType& ct, const Limits& limits = {});

/// chi^{(n-m, m)} on the class of `ct`, read off frobenius_poly. Needs 0 <= 2m <= n.
Int two_row_char(const CycleType& ct, int m, const Limits& limits = {});

/// Same value as two_row_char, but discards monomials whose x2-degree passes m
/// while multiplying.
Int two_row_char_pruned(const CycleType& ct, int m, const Limits& limits = {});

/// chi^lam on the class of `ct` by the Murnaghan-Nakayama rule.
Int mn_character(const Partition& lam, const CycleType& ct);

/// Number of standard tableaux of shape lam (hook length formula).
Int hook_length_dimension(const Partition& lam);

/// Semistandard tableaux of shape mu and content lam.
Int kostka(const Partition& mu, const Partition& lam);

struct ModuleDecomposition {
  Partition shape;
  /// (mu, K_{mu, shape}) for every mu with nonzero Kostka number, in
  /// reverse-lexicographic order of mu.
  std::vector<std::pair<Partition, Int>> constituents;
};

/// Irreducible constituents of the permutation module on lam-tabloids.
ModuleDecomposition decompose_young_module(const Partition& lam);

/// |X| * chi^lam(x) / chi^lam(1): the scalar by which the class sum of `ct`
/// acts on the lam-isotypic block.
Rational class_sum_eigenvalue(const CycleType& ct, const Partition& lam);

} // namespace sncode
