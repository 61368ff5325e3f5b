#pragma once

#include <map>
#include <optional>
#include <vector>

#include "drury/linalg.hpp"
#include "drury/polynomial.hpp"

namespace drury {

/// A d-tuple of square matrices of a common size. Dimension zero is allowed
/// internally (restrictions to the zero subspace).
class RowTuple {
 public:
  RowTuple() = default;
  explicit RowTuple(std::vector<Matrix> mats);

  static RowTuple zero(int d, Index dim);

  int size() const { return static_cast<int>(mats_.size()); }
  Index dim() const { return dim_; }
  /// k is zero-based.
  const Matrix& operator[](int k) const { return mats_.at(k); }
  const std::vector<Matrix>& matrices() const { return mats_; }

  RowTuple adjoint() const;
  RowTuple scaled(Complex c) const;
  /// (S T_k S^-1)_k.
  RowTuple similar(const Matrix& s) const;
  /// (A T_k B)_k, e.g. a compression when A = B^*.
  RowTuple sandwich(const Matrix& a, const Matrix& b) const;
  double max_norm() const;
  /// sum_k T_k T_k^*.
  Matrix row_sum() const;

 private:
  std::vector<Matrix> mats_;
  Index dim_ = 0;
};

RowTuple direct_sum(const RowTuple& a, const RowTuple& b);

/// max_{j,k} ||T_j T_k - T_k T_j||.
double commutator_norm(const RowTuple& t);
bool is_commuting(const RowTuple& t, const Tolerance& tol = {});

/// max(1, max_k ||T_k||)^degree: the size against which T^alpha is judged
/// to vanish.
double monomial_scale(const RowTuple& t, int degree);

enum class Purity { Pure, NotPure, Indeterminate };

const char* to_string(Purity p);

struct PurityResult {
  Purity verdict = Purity::Indeterminate;
  int iterations = 0;
  double last_norm = 0;
};

/// Iterates Phi(X) = sum T_k X T_k^* from the identity. Throws
/// HypothesisError for a tuple that is not a row contraction.
PurityResult purity(const RowTuple& t, const Tolerance& tol = {});

struct TupleReport {
  bool commuting = false;
  bool row_contraction = false;
  Purity purity = Purity::Indeterminate;
  std::optional<int> nilpotent;
  Index defect = 0;
  Matrix defect_operator;
  Matrix row_sum;
  double commutator_norm = 0;
};

TupleReport validate(const RowTuple& t, const Tolerance& tol = {});

/// Least m with T^alpha = 0 for every |alpha| = m, searched up to cap
/// (default dim + 1). Throws HypothesisError for non-commuting input.
std::optional<int> nilpotency_index(const RowTuple& t,
                                    std::optional<int> cap = std::nullopt,
                                    const Tolerance& tol = {});

/// Lazily computed powers T^alpha of a commuting tuple.
class MonomialCache {
 public:
  explicit MonomialCache(RowTuple t);

  const RowTuple& tuple() const { return t_; }
  const Matrix& power(const MultiIndex& alpha);

 private:
  RowTuple t_;
  std::map<MultiIndex, Matrix, GradedOrder> cache_;
};

Matrix poly_eval(const Polynomial& p, const RowTuple& t);
Matrix poly_eval(const Polynomial& p, MonomialCache& cache);
Matrix word_eval(const Word& w, const RowTuple& t);

}  // namespace drury
