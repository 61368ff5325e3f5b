#include "drury/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "drury/errors.hpp"
#include "drury/fock.hpp"
#include "drury/random.hpp"
#include "drury/subspaces.hpp"

namespace drury {

namespace {

void check_vector(const RowTuple& t, const Vector& xi) {
  if (xi.size() != t.dim()) {
    throw std::invalid_argument("vector length does not match the tuple");
  }
}

int require_nilpotent(const RowTuple& t, const Tolerance& tol) {
  const auto index = nilpotency_index(t, std::nullopt, tol);
  if (!index) {
    throw HypothesisError("nilpotent", "this operation needs a nilpotent tuple");
  }
  return *index;
}

Vector first_echelon_row(const Matrix& columns) {
  const Matrix r = rref(columns.transpose());
  return r.row(0).transpose();
}

}  // namespace

Subspace krylov_span(const RowTuple& t, const Matrix& seeds,
                     const Tolerance& tol) {
  const Index n = t.dim();
  if (seeds.rows() != n) {
    throw std::invalid_argument("seed vectors do not match the tuple");
  }
  Matrix q(n, 0);
  std::vector<Vector> pending;
  auto absorb = [&](Vector v, double cut) {
    for (int pass = 0; pass < 2; ++pass) {
      v -= q * (q.adjoint() * v);
    }
    const double r = v.norm();
    if (r > cut && q.cols() < n) {
      q.conservativeResize(Eigen::NoChange, q.cols() + 1);
      q.col(q.cols() - 1) = v / r;
      pending.push_back(q.col(q.cols() - 1));
    }
  };
  double seed_scale = 0;
  for (Index j = 0; j < seeds.cols(); ++j) {
    seed_scale = std::max(seed_scale, seeds.col(j).norm());
  }
  for (Index j = 0; j < seeds.cols(); ++j) {
    absorb(seeds.col(j), tol.rank_rel_tol * seed_scale);
  }
  const double cut = tol.rank_rel_tol * std::max(1.0, t.max_norm());
  while (!pending.empty()) {
    const Vector v = pending.back();
    pending.pop_back();
    for (int k = 0; k < t.size(); ++k) {
      absorb(t[k] * v, cut);
    }
  }
  return Subspace(n, q, tol);
}

Subspace krylov(const RowTuple& t, const Vector& xi, const Tolerance& tol) {
  check_vector(t, xi);
  return krylov_span(t, xi, tol);
}

bool is_cyclic(const RowTuple& t, const Vector& xi, const Tolerance& tol) {
  return krylov(t, xi, tol).dimension() == t.dim();
}

Index multiplicity(const RowTuple& t, const Tolerance& tol) {
  // Index 1 means every T_k is negligible at the tuple's scale.
  if (require_nilpotent(t, tol) <= 1) {
    return t.dim();
  }
  Matrix ranges(t.dim(), t.dim() * t.size());
  for (int k = 0; k < t.size(); ++k) {
    ranges.middleCols(k * t.dim(), t.dim()) = t[k];
  }
  return t.dim() - numerical_rank(ranges, tol);
}

Index multiplicity_exhaustive(const RowTuple& t, std::uint64_t seed,
                              int random_trials, const Tolerance& tol) {
  const Index n = t.dim();
  Rng rng(seed);
  for (Index r = 1; r <= n; ++r) {
    // Every r-subset of the standard basis, when there are few enough.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + r, true);
    int subsets = 0;
    do {
      Matrix s(n, r);
      Index c = 0;
      for (Index i = 0; i < n; ++i) {
        if (mask[i]) {
          s.col(c++) = Vector::Unit(n, i);
        }
      }
      if (krylov_span(t, s, tol).dimension() == n) {
        return r;
      }
    } while (++subsets < 256 && std::prev_permutation(mask.begin(), mask.end()));
    for (int trial = 0; trial < random_trials; ++trial) {
      if (krylov_span(t, random_matrix(n, r, rng), tol).dimension() == n) {
        return r;
      }
    }
  }
  return n;
}

QuotientContext::QuotientContext(const RowTuple& t, const Tolerance& tol)
    : t_(t), tol_(tol) {
  require_nilpotent(t, tol);
  ann_ = drury::annihilator(t, tol);
  algebra_ = quotient_algebra(ann_, tol);
  MonomialCache cache(t);
  for (const auto& alpha : algebra_.basis) {
    basis_ops_.push_back(cache.power(alpha));
  }
}

Matrix QuotientContext::evaluation(const Vector& xi) const {
  check_vector(t_, xi);
  Matrix e(t_.dim(), delta());
  for (Index j = 0; j < delta(); ++j) {
    e.col(j) = basis_ops_[j] * xi;
  }
  return e;
}

Matrix QuotientContext::operator_of(const Vector& coords) const {
  Matrix out = Matrix::Zero(t_.dim(), t_.dim());
  for (Index j = 0; j < delta(); ++j) {
    out += coords(j) * basis_ops_[j];
  }
  return out;
}

bool is_separating(const QuotientContext& ctx, const Vector& xi) {
  return numerical_rank(ctx.evaluation(xi), ctx.tolerance()) == ctx.delta();
}

bool is_separating(const RowTuple& t, const Vector& xi, const Tolerance& tol) {
  return is_separating(QuotientContext(t, tol), xi);
}

std::optional<Polynomial> separating_witness(const QuotientContext& ctx,
                                             const Vector& xi) {
  const RankKernel rk = rank_and_kernel(ctx.evaluation(xi), ctx.tolerance());
  if (rk.kernel.cols() == 0) {
    return std::nullopt;
  }
  return ctx.algebra().lift(first_echelon_row(rk.kernel)).chopped(1e-12);
}

std::optional<Polynomial> separating_witness(const RowTuple& t,
                                             const Vector& xi,
                                             const Tolerance& tol) {
  return separating_witness(QuotientContext(t, tol), xi);
}

bool is_separating_set(const QuotientContext& ctx, const Matrix& vectors) {
  const Index n = ctx.tuple().dim();
  if (vectors.rows() != n) {
    throw std::invalid_argument("vectors do not match the tuple");
  }
  Matrix stacked(n * vectors.cols(), ctx.delta());
  for (Index j = 0; j < vectors.cols(); ++j) {
    stacked.middleRows(j * n, n) = ctx.evaluation(vectors.col(j));
  }
  return numerical_rank(stacked, ctx.tolerance()) == ctx.delta();
}

GreedyResult separating_greedy(const RowTuple& t, std::uint64_t seed,
                               Sampler sampler, const Tolerance& tol) {
  const QuotientContext ctx(t, tol);
  const Index n = t.dim();
  GreedyResult out;
  out.delta = ctx.delta();
  Matrix k = identity(ctx.delta());
  out.kernel_dims.push_back(k.cols());
  Rng rng(seed);
  while (k.cols() > 0) {
    const Matrix p = ctx.operator_of(first_echelon_row(k));
    const double p_norm = operator_norm(p);
    std::optional<Vector> xi;
    if (sampler == Sampler::StandardBasis) {
      for (Index i = 0; i < n && !xi; ++i) {
        if (p.col(i).norm() > 1e-8 * p_norm) {
          xi = Vector::Unit(n, i);
        }
      }
    } else {
      for (int attempt = 0; attempt < 64 && !xi; ++attempt) {
        Vector v = random_vector(n, rng);
        if ((p * v).norm() > 1e-6 * p_norm * v.norm()) {
          xi = std::move(v);
        }
      }
    }
    if (!xi) {
      throw NumericalError("no vector outside ker p(T) was found");
    }
    const RankKernel rk = rank_and_kernel(ctx.evaluation(*xi) * k, tol);
    Matrix next = k * rk.kernel;
    if (next.cols() >= k.cols()) {
      throw NumericalError("greedy kernel failed to shrink");
    }
    k = std::move(next);
    out.vectors.push_back(*xi);
    out.kernel_dims.push_back(k.cols());
  }
  return out;
}

GramReport gram_operator(const RowTuple& t, const Vector& xi,
                         const Tolerance& tol) {
  check_vector(t, xi);
  const int m = require_nilpotent(t, tol);
  MonomialCache cache(t);
  GramReport r;
  r.gram = Matrix::Zero(t.dim(), t.dim());
  for (const auto& alpha : monomials_up_to(t.size(), std::max(0, m - 1))) {
    const Vector v = cache.power(alpha) * xi;
    r.gram += alpha.multinomial() * (v * v.adjoint());
  }
  r.bound = operator_norm(r.gram);
  r.cyclic = is_cyclic(t, xi, tol);
  return r;
}

Matrix fock_intertwiner(const RowTuple& t, const Vector& xi, int N) {
  check_vector(t, xi);
  const TruncatedFock fock(t.size(), N);
  Matrix x = Matrix::Zero(t.dim(), fock.dimension());
  x.col(0) = xi;
  for (Index j = 0; j < fock.dimension(); ++j) {
    for (int k = 1; k <= t.size(); ++k) {
      if (auto i = fock.prepend(k, j)) {
        x.col(*i) = t[k - 1] * x.col(j);
      } else {
        break;
      }
    }
  }
  return x;
}

double fock_intertwining_residual(const RowTuple& t, const Matrix& x, int N) {
  const TruncatedFock fock(t.size(), N);
  if (x.rows() != t.dim() || x.cols() != fock.dimension()) {
    throw std::invalid_argument("intertwiner has the wrong shape");
  }
  const Index inner = N == 0 ? 0 : fock.dimension() - static_cast<Index>(std::pow(t.size(), N));
  double worst = 0;
  for (int k = 1; k <= t.size(); ++k) {
    Matrix diff(t.dim(), inner);
    for (Index j = 0; j < inner; ++j) {
      diff.col(j) = x.col(*fock.prepend(k, j)) - t[k - 1] * x.col(j);
    }
    if (inner > 0) {
      worst = std::max(worst, operator_norm(diff));
    }
  }
  return worst;
}

QuasiAffineWitness quasiaffine_witness(const RowTuple& t, std::uint64_t seed,
                                       const Tolerance& tol) {
  require_nilpotent(t, tol);
  if (multiplicity(t, tol) != 1) {
    throw HypothesisError("cyclic", "the witness needs a cyclic tuple");
  }
  QuasiAffineWitness w;
  w.ideal = annihilator(t, tol);
  w.space = model_space(w.ideal, std::nullopt, tol);
  w.model = model_tuple(w.space);
  if (w.model.dim() != t.dim()) {
    throw NumericalError("model space dimension differs from the tuple");
  }
  const IntertwinerSpace space = intertwiner_space(w.model, t, tol);
  if (space.dimension() == 0) {
    throw NumericalError("the intertwiner space is trivial");
  }
  Rng rng(seed);
  const Index n = t.dim();
  for (int attempt = 1; attempt <= 32; ++attempt) {
    const Vector g = random_vector(space.dimension(), rng);
    Matrix x = Matrix::Zero(n, n);
    for (Index i = 0; i < space.dimension(); ++i) {
      x += g(i) * space.basis[i];
    }
    const Index rank = numerical_rank(x, tol);
    if (rank < n) {
      continue;
    }
    x /= operator_norm(x);
    w.x = x;
    w.rank = rank;
    w.attempts = attempt;
    for (int k = 0; k < t.size(); ++k) {
      w.residual =
          std::max(w.residual, operator_norm(x * w.model[k] - t[k] * x));
    }
    return w;
  }
  throw NumericalError("no invertible intertwiner found in 32 attempts");
}

}  // namespace drury
