#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drury/linalg.hpp"
#include "drury/subspace.hpp"
#include "drury/tuples.hpp"

namespace drury {

/// ||(I - P) T_k P|| small for every k.
bool is_invariant(const RowTuple& t, const Subspace& m,
                  const Tolerance& tol = {});
/// The orthogonal complement is invariant.
bool is_coinvariant(const RowTuple& t, const Subspace& m,
                    const Tolerance& tol = {});

Subspace generated_invariant(const RowTuple& t, const Matrix& seeds,
                             const Tolerance& tol = {});

/// frame^* T_k frame; throws HypothesisError unless m is invariant.
RowTuple restrict(const RowTuple& t, const Subspace& m,
                  const Tolerance& tol = {});
/// frame^* T_k frame for any subspace.
RowTuple compress(const RowTuple& t, const Subspace& m);

enum class Verdict { Consistent, TheoremViolation, Inapplicable };

const char* to_string(Verdict v);

struct RigidityVerdict {
  Verdict verdict = Verdict::Inapplicable;
  std::string hypothesis;  // which hypothesis applied, or which one failed
  bool annihilators_equal = false;
  bool subspaces_equal = false;
};

/// Invariant subspaces M, N. Applies when T is cyclic and N is the whole
/// space, or when T^* is cyclic; then equal annihilators of the restrictions
/// with M != N is a violation.
RigidityVerdict rigidity_invariant_check(const RowTuple& t, const Subspace& m,
                                         const Subspace& n,
                                         const Tolerance& tol = {});

/// Co-invariant subspaces M, N of a cyclic tuple, compared through the
/// annihilators of the compressions.
RigidityVerdict rigidity_coinvariant_check(const RowTuple& t,
                                           const Subspace& m,
                                           const Subspace& n,
                                           const Tolerance& tol = {});

struct IntertwinerSpace {
  Index rows = 0;  // target dimension
  Index cols = 0;  // source dimension
  std::vector<Matrix> basis;

  Index dimension() const { return static_cast<Index>(basis.size()); }
};

/// All X with X S_k = T_k X, S = source and T = target.
IntertwinerSpace intertwiner_space(const RowTuple& source,
                                   const RowTuple& target,
                                   const Tolerance& tol = {});

struct DecompositionCertificate {
  bool exists = false;
  Index commutant_dim = 0;
  Index radical_dim = 0;
  std::optional<Matrix> idempotent;
};

/// Decides whether the commutant has a nontrivial idempotent, via the
/// dimension of the commutant modulo its radical. When it does, a
/// certificate E is built as a spectral idempotent of a random commutant
/// element.
DecompositionCertificate decomposition_exists(const RowTuple& t,
                                              std::uint64_t seed = 0,
                                              const Tolerance& tol = {});

struct Decomposition {
  Subspace m;
  Subspace n;
};

/// Splits into indecomposable invariant summands, recursively.
std::vector<Subspace> indecomposable_summands(const RowTuple& t,
                                              std::uint64_t seed = 0,
                                              const Tolerance& tol = {});

/// An invariant decomposition; with want_cyclic, one whose first part
/// carries a cyclic restriction.
std::optional<Decomposition> decomposition_find(const RowTuple& t,
                                                bool want_cyclic,
                                                std::uint64_t seed = 0,
                                                const Tolerance& tol = {});

struct SplitResult {
  Subspace n;
  bool degenerate = false;  // M was the whole space
  Vector xi;                // cyclic vector of the adjoint restriction
};

/// Given M invariant with Ann(T|M) = Ann(T) and (T|M)^* cyclic, returns the
/// orthogonal complement of the adjoint orbit of a cyclic vector. Throws
/// HypothesisError naming the first failed hypothesis.
SplitResult splitting_construct(const RowTuple& t, const Subspace& m,
                                std::uint64_t seed = 0,
                                const Tolerance& tol = {});

}  // namespace drury
