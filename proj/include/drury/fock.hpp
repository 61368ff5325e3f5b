#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "drury/linalg.hpp"
#include "drury/polynomial.hpp"

namespace drury {

/// Polynomials of degree <= N inside the Drury-Arveson space, with the
/// orthonormal basis of normalized monomials x^alpha / ||x^alpha|| in graded
/// order. Truncating to a lower degree is a leading principal submatrix.
class TruncatedDA {
 public:
  TruncatedDA(int d, int degree_cap);

  int variables() const { return d_; }
  int degree_cap() const { return cap_; }
  Index dimension() const { return static_cast<Index>(basis_.size()); }
  const std::vector<MultiIndex>& basis() const { return basis_; }
  std::optional<Index> index_of(const MultiIndex& alpha) const;

  /// Coordinates of p in the orthonormal basis; terms above the cap are
  /// dropped.
  Vector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const Vector& coords) const;

 private:
  int d_;
  int cap_;
  std::vector<MultiIndex> basis_;
  std::map<MultiIndex, Index, GradedOrder> index_;
};

/// Words of length <= N in the full Fock space, in graded-lexicographic order.
class TruncatedFock {
 public:
  TruncatedFock(int d, int degree_cap);

  int variables() const { return d_; }
  int degree_cap() const { return cap_; }
  Index dimension() const { return offsets_.back(); }
  Word word(Index i) const;
  Index index_of(const Word& w) const;
  /// Index of e_{k w} for the word at index i, or nullopt when the word
  /// already has maximal length. k is 1-based.
  std::optional<Index> prepend(int k, Index i) const;
  int length_of(Index i) const;

 private:
  int d_;
  int cap_;
  std::vector<Index> offsets_;  // offsets_[s] = first index of length s
  std::vector<Index> powers_;   // powers_[s] = d^s
};

/// ||x^alpha|| = sqrt(alpha! / |alpha|!).
double da_monomial_norm(const MultiIndex& alpha);

/// 1 / (1 - <z, w>), both points in the open unit ball.
Complex da_kernel(std::span<const Complex> z, std::span<const Complex> w);

/// Matrix of P_N M_p restricted to the truncation, in the normalized monomial
/// basis.
Matrix multiplication_matrix(const Polynomial& p, const TruncatedDA& space);

/// ||P_N M_p P_N||, a lower bound for the multiplier norm that is
/// nondecreasing in N.
double truncated_multiplier_norm(const Polynomial& p, int N);

struct MultiplierNormSequence {
  std::vector<int> degrees;
  std::vector<double> norms;
  /// First N after which consecutive increments stay below the tolerance;
  /// a heuristic only, the convergence rate is not known in general.
  std::optional<int> stabilized_at;
};

MultiplierNormSequence multiplier_norm_sequence(const Polynomial& p, int first,
                                                int last,
                                                double stabilization_tol = 1e-9);

/// Matrix of P_N L_k on the truncated Fock space; k is 1-based. Words of
/// maximal length are sent to zero.
Matrix creation_matrix(int k, const TruncatedFock& space);

/// Isometry from TruncatedDA(d, N) into TruncatedFock(d, N) sending the
/// normalized monomial x^alpha to the normalized sum of the words that
/// abelianize to alpha.
Matrix symmetrization_map(const TruncatedFock& space);

struct GleasonDecomposition {
  Polynomial taylor;
  std::map<MultiIndex, Polynomial, GradedOrder> remainders;

  /// taylor + sum (x - w)^alpha remainders[alpha].
  Polynomial reassemble(std::span<const Complex> w) const;
};

/// p = sum_{|alpha|<n} d^alpha p(w) (x-w)^alpha / alpha!
///     + sum_{|alpha|=n} (x-w)^alpha phi_alpha,
/// with each higher-order monomial of p(x + w) assigned to the remainder
/// obtained by dividing by (x1 - w1) as often as possible, then (x2 - w2), ...
GleasonDecomposition gleason_decompose(const Polynomial& p,
                                       std::span<const Complex> w, int n);

}  // namespace drury
