#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "drury/ideals.hpp"
#include "drury/linalg.hpp"
#include "drury/subspace.hpp"
#include "drury/tuples.hpp"

namespace drury {

/// Smallest invariant subspace containing the columns of `seeds`.
Subspace krylov_span(const RowTuple& t, const Matrix& seeds,
                     const Tolerance& tol = {});
Subspace krylov(const RowTuple& t, const Vector& xi, const Tolerance& tol = {});
bool is_cyclic(const RowTuple& t, const Vector& xi, const Tolerance& tol = {});

/// dim(H / sum_k T_k H), the least size of a cyclic set for a nilpotent tuple.
Index multiplicity(const RowTuple& t, const Tolerance& tol = {});
/// Least r such that some r-subset of a randomized net of vectors (standard
/// basis subsets plus seeded Gaussian draws) is cyclic.
Index multiplicity_exhaustive(const RowTuple& t, std::uint64_t seed,
                              int random_trials = 64,
                              const Tolerance& tol = {});

/// Annihilator, quotient algebra and cached powers of a nilpotent tuple, as
/// needed by every separating-vector computation.
class QuotientContext {
 public:
  explicit QuotientContext(const RowTuple& t, const Tolerance& tol = {});

  const RowTuple& tuple() const { return t_; }
  const AnnihilatorBasis& annihilator() const { return ann_; }
  const QuotientAlgebra& algebra() const { return algebra_; }
  const Tolerance& tolerance() const { return tol_; }
  Index delta() const { return algebra_.dimension(); }

  /// Columns T^alpha xi over the quotient basis.
  Matrix evaluation(const Vector& xi) const;
  /// p(T) for quotient coordinates c.
  Matrix operator_of(const Vector& coords) const;

 private:
  RowTuple t_;
  Tolerance tol_;
  AnnihilatorBasis ann_;
  QuotientAlgebra algebra_;
  std::vector<Matrix> basis_ops_;
};

bool is_separating(const QuotientContext& ctx, const Vector& xi);
bool is_separating(const RowTuple& t, const Vector& xi,
                   const Tolerance& tol = {});

/// A polynomial p with p(T) xi = 0 and p(T) != 0, normalized so its leading
/// quotient coordinate is 1; absent when xi is separating.
std::optional<Polynomial> separating_witness(const QuotientContext& ctx,
                                             const Vector& xi);
std::optional<Polynomial> separating_witness(const RowTuple& t,
                                             const Vector& xi,
                                             const Tolerance& tol = {});

/// True iff no nonzero class [p] has p(T) v = 0 for every column v.
bool is_separating_set(const QuotientContext& ctx, const Matrix& vectors);

enum class Sampler { Gaussian, StandardBasis };

struct GreedyResult {
  std::vector<Vector> vectors;
  std::vector<Index> kernel_dims;  // dim K before the first and after each step
  Index delta = 0;
};

/// Greedy separating set: while some class [p] kills every chosen vector,
/// add a vector outside ker p(T). Throws NumericalError when sampling fails
/// or the kernel fails to shrink.
GreedyResult separating_greedy(const RowTuple& t, std::uint64_t seed,
                               Sampler sampler = Sampler::Gaussian,
                               const Tolerance& tol = {});

struct GramReport {
  Matrix gram;
  double bound = 0;  // ||G||, the least admissible C^2
  bool cyclic = false;
};

/// G = sum_alpha (|alpha|!/alpha!) (T^alpha xi)(T^alpha xi)^*, the word sum
/// for a commuting nilpotent tuple.
GramReport gram_operator(const RowTuple& t, const Vector& xi,
                         const Tolerance& tol = {});

/// X e_w = T_w xi on the Fock space truncated at word length N.
Matrix fock_intertwiner(const RowTuple& t, const Vector& xi, int N);
/// max_k ||X L_k - T_k X|| on words shorter than N.
double fock_intertwining_residual(const RowTuple& t, const Matrix& x, int N);

struct QuasiAffineWitness {
  Matrix x;  // operator norm 1
  RowTuple model;
  ModelSpace space;
  AnnihilatorBasis ideal;
  double residual = 0;  // max_k ||X M_k - T_k X|| / ||X||
  Index rank = 0;
  int attempts = 0;
};

/// Invertible X with X (M_J)_k = T_k X, J = Ann(T). Throws HypothesisError
/// for non-commuting, non-nilpotent or non-cyclic input and NumericalError
/// when no invertible element turns up.
QuasiAffineWitness quasiaffine_witness(const RowTuple& t, std::uint64_t seed,
                                       const Tolerance& tol = {});

}  // namespace drury
