#pragma once

#include <random>

#include "drury/ideals.hpp"
#include "drury/linalg.hpp"
#include "drury/subspace.hpp"
#include "drury/tuples.hpp"

namespace drury {

using Rng = std::mt19937_64;

/// Standard complex Gaussian entries.
Vector random_vector(Index n, Rng& rng);
Matrix random_matrix(Index rows, Index cols, Rng& rng);
Matrix random_unitary(Index n, Rng& rng);
/// Q1 diag(s) Q2 with s uniform in [lo, hi].
Matrix random_well_conditioned(Index n, Rng& rng, double lo = 1.0,
                               double hi = 3.0);

/// Divides by sqrt(lambda_max(sum T_k T_k^*)) when that exceeds one.
RowTuple contractive_rescale(const RowTuple& t);

/// Ideal containing every monomial of some degree m plus a few random
/// generators without constant term, with min_delta <= delta <= max_delta.
AnnihilatorBasis random_nilpotent_ideal(int d, Index max_delta, Rng& rng,
                                        Index min_delta = 1);

/// S M_J S^-1 for a random well-conditioned S, rescaled to a row contraction.
RowTuple random_similar_model(const AnnihilatorBasis& ideal, Rng& rng);

/// Cyclic commuting nilpotent row contraction with delta <= max_delta.
RowTuple random_cyclic_nilpotent(Rng& rng, Index max_delta);
/// Commuting nilpotent tuple whose adjoint is cyclic.
RowTuple random_adjoint_cyclic(Rng& rng, Index max_delta);
/// Assorted commuting nilpotent tuples: models, similarities, direct sums,
/// adjoints, restrictions and compressions.
RowTuple random_nilpotent_tuple(Rng& rng, Index max_dim);

/// Invariant subspace generated by random vectors pushed into sum T_k H, so
/// it is proper whenever T is nilpotent.
Subspace random_proper_invariant(const RowTuple& t, Rng& rng);
/// Invariant subspace generated by one or two random vectors.
Subspace random_invariant(const RowTuple& t, Rng& rng);
/// Adjoint orbit closure of random vectors.
Subspace random_coinvariant(const RowTuple& t, Rng& rng);

struct SplittingInstance {
  RowTuple t;
  Subspace m;
};

/// T = U (A + B) U^* with Ann(B) = Ann(T) inside Ann(A), B^* cyclic and
/// M = U(0 + H_B).
SplittingInstance random_splitting_instance(Rng& rng, Index max_delta = 6);

}  // namespace drury
