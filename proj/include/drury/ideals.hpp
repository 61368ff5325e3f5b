#pragma once

#include <optional>
#include <vector>

#include "drury/linalg.hpp"
#include "drury/polynomial.hpp"
#include "drury/tuples.hpp"

namespace drury {

/// Ideal of C[x] containing every monomial of degree `degree_bound`, stored as
/// its intersection with the polynomials of degree <= degree_bound. Rows of
/// `coefficients` are in reduced row echelon form over `monomials`.
struct AnnihilatorBasis {
  int variables = 1;
  int degree_bound = 0;
  std::vector<MultiIndex> monomials;
  Matrix coefficients;
  Matrix frame;  // orthonormal columns spanning the same coefficient space

  Index dimension() const { return coefficients.rows(); }
  Index ambient_dimension() const {
    return static_cast<Index>(monomials.size());
  }
  std::vector<Polynomial> polynomials() const;

  /// The ideal generated by `generators` together with all monomials of
  /// degree `degree_bound`.
  static AnnihilatorBasis from_generators(
      int d, int degree_bound, const std::vector<Polynomial>& generators,
      const Tolerance& tol = {});
  static AnnihilatorBasis from_coefficient_span(
      int d, int degree_bound, const Matrix& columns, const Tolerance& tol = {});

  /// The same ideal presented at a larger degree bound.
  AnnihilatorBasis lifted(int new_bound) const;
  bool contains(const Polynomial& p, double rel_tol = 1e-8) const;
};

/// Equality of the ideals as subspaces, after lifting to a common bound.
bool same_ideal(const AnnihilatorBasis& a, const AnnihilatorBasis& b,
                double threshold = 1e-8);
/// Inclusion a subset of b.
bool ideal_contains(const AnnihilatorBasis& b, const AnnihilatorBasis& a,
                    double threshold = 1e-8);

/// Polynomials p of degree <= m with p(T) = 0, m the nilpotency index or a
/// larger explicit bound. Throws HypothesisError unless T is commuting and
/// nilpotent.
AnnihilatorBasis annihilator(const RowTuple& t, const Tolerance& tol = {},
                             std::optional<int> degree_bound = std::nullopt);

/// A generating subset of the basis, chosen greedily by degree. Not
/// canonical.
std::vector<Polynomial> minimal_generators(const AnnihilatorBasis& ann,
                                           const Tolerance& tol = {});

struct QuotientAlgebra {
  int variables = 1;
  int degree_bound = 0;
  std::vector<MultiIndex> monomials;  // all monomials up to the bound
  std::vector<MultiIndex> basis;      // monomials whose classes form a basis
  Matrix reducer;                     // basis coordinates of every monomial
  std::vector<Matrix> mult_table;     // mult_table[i]: left product by basis[i]

  Index dimension() const { return static_cast<Index>(basis.size()); }
  /// Coordinates of [p] in the monomial basis.
  Vector reduce(const Polynomial& p) const;
  Polynomial lift(const Vector& coords) const;
};

QuotientAlgebra quotient_algebra(const AnnihilatorBasis& ann,
                                 const Tolerance& tol = {});

/// alpha with T^alpha != 0 and T^alpha T_k = 0 for every k.
std::vector<MultiIndex> omega_e(const RowTuple& t, const Tolerance& tol = {});

struct ModelSpace {
  int variables = 1;
  int degree_cap = 0;
  std::vector<MultiIndex> monomials;  // basis of the truncated space
  Matrix frame;  // orthonormal columns in normalized monomial coordinates

  Index dimension() const { return frame.cols(); }
};

/// Orthogonal complement of the ideal inside the polynomials of degree below
/// the bound; N defaults to the bound.
ModelSpace model_space(const AnnihilatorBasis& ann,
                       std::optional<int> degree_cap = std::nullopt,
                       const Tolerance& tol = {});

RowTuple model_tuple(const ModelSpace& space);

/// Model tuple of the ideal in one call.
RowTuple model_of(const AnnihilatorBasis& ann, const Tolerance& tol = {});

}  // namespace drury
