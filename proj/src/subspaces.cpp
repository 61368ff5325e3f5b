#include "drury/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drury/errors.hpp"
#include "drury/ideals.hpp"
#include "drury/random.hpp"
#include "drury/vectors.hpp"

namespace drury {

Subspace::Subspace(Index ambient_dim, const Matrix& span, const Tolerance& tol)
    : ambient_(ambient_dim) {
  if (span.rows() != ambient_dim) {
    throw std::invalid_argument("spanning vectors have the wrong length");
  }
  frame_ = span.cols() == 0 ? Matrix(ambient_dim, 0) : orthonormalize(span, tol);
}

Subspace Subspace::zero(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix(ambient_dim, 0));
}

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ambient_dim, identity(ambient_dim));
}

Matrix Subspace::projector() const { return frame_ * frame_.adjoint(); }

Subspace Subspace::complement() const {
  if (is_zero()) {
    return full(ambient_);
  }
  if (is_full()) {
    return zero(ambient_);
  }
  // Columns of the full SVD beyond the frame span the complement.
  Eigen::JacobiSVD<Matrix> svd(frame_, Eigen::ComputeFullU);
  return Subspace(ambient_, svd.matrixU().rightCols(ambient_ - dimension()));
}

bool Subspace::contains(const Vector& v, double rel_tol) const {
  const double size = v.norm();
  return (v - frame_ * (frame_.adjoint() * v)).norm() <= rel_tol * size;
}

bool same_subspace(const Subspace& a, const Subspace& b, double threshold) {
  return a.ambient_dim() == b.ambient_dim() &&
         a.dimension() == b.dimension() &&
         subspace_distance(a.frame(), b.frame()) < threshold;
}

namespace {

void check_ambient(const RowTuple& t, const Subspace& m) {
  if (m.ambient_dim() != t.dim()) {
    throw std::invalid_argument("subspace ambient dimension does not match");
  }
}

double invariance_cut(const RowTuple& t, const Tolerance& tol) {
  return 10 * tol.rank_rel_tol * std::max(1.0, t.max_norm());
}

}  // namespace

bool is_invariant(const RowTuple& t, const Subspace& m, const Tolerance& tol) {
  check_ambient(t, m);
  const Matrix& f = m.frame();
  for (const auto& tk : t.matrices()) {
    const Matrix image = tk * f;
    if (operator_norm(image - f * (f.adjoint() * image)) >
        invariance_cut(t, tol)) {
      return false;
    }
  }
  return true;
}

bool is_coinvariant(const RowTuple& t, const Subspace& m, const Tolerance& tol) {
  check_ambient(t, m);
  return is_invariant(t.adjoint(), m, tol);
}

Subspace generated_invariant(const RowTuple& t, const Matrix& seeds,
                             const Tolerance& tol) {
  return krylov_span(t, seeds, tol);
}

RowTuple restrict(const RowTuple& t, const Subspace& m, const Tolerance& tol) {
  if (!is_invariant(t, m, tol)) {
    throw HypothesisError("invariant", "restriction to a non-invariant subspace");
  }
  return compress(t, m);
}

RowTuple compress(const RowTuple& t, const Subspace& m) {
  check_ambient(t, m);
  return t.sandwich(m.frame().adjoint(), m.frame());
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "CONSISTENT";
    case Verdict::TheoremViolation:
      return "THEOREM_VIOLATION";
    case Verdict::Inapplicable:
      return "INAPPLICABLE";
  }
  return "INAPPLICABLE";
}

namespace {

// Empty string when T is commuting and nilpotent, else the failed hypothesis.
std::string nilpotent_failure(const RowTuple& t, const Tolerance& tol) {
  if (!is_commuting(t, tol)) {
    return "commuting";
  }
  if (!nilpotency_index(t, std::nullopt, tol)) {
    return "nilpotent";
  }
  return "";
}

void compare(RigidityVerdict& v, const RowTuple& a, const RowTuple& b,
             const Subspace& m, const Subspace& n, const Tolerance& tol) {
  v.annihilators_equal = same_ideal(annihilator(a, tol), annihilator(b, tol));
  v.subspaces_equal = same_subspace(m, n);
  v.verdict = v.annihilators_equal && !v.subspaces_equal
                  ? Verdict::TheoremViolation
                  : Verdict::Consistent;
}

}  // namespace

RigidityVerdict rigidity_invariant_check(const RowTuple& t, const Subspace& m,
                                         const Subspace& n,
                                         const Tolerance& tol) {
  RigidityVerdict v;
  v.hypothesis = nilpotent_failure(t, tol);
  if (!v.hypothesis.empty()) {
    return v;
  }
  if (!is_invariant(t, m, tol) || !is_invariant(t, n, tol)) {
    v.hypothesis = "invariant";
    return v;
  }
  if (multiplicity(t.adjoint(), tol) == 1) {
    v.hypothesis = "adjoint_cyclic";
  } else if (n.is_full() && multiplicity(t, tol) == 1) {
    v.hypothesis = "cyclic_full";
  } else {
    v.hypothesis = "cyclic";
    return v;
  }
  compare(v, restrict(t, m, tol), restrict(t, n, tol), m, n, tol);
  return v;
}

RigidityVerdict rigidity_coinvariant_check(const RowTuple& t,
                                           const Subspace& m,
                                           const Subspace& n,
                                           const Tolerance& tol) {
  RigidityVerdict v;
  v.hypothesis = nilpotent_failure(t, tol);
  if (!v.hypothesis.empty()) {
    return v;
  }
  if (!is_coinvariant(t, m, tol) || !is_coinvariant(t, n, tol)) {
    v.hypothesis = "coinvariant";
    return v;
  }
  if (multiplicity(t, tol) != 1) {
    v.hypothesis = "cyclic";
    return v;
  }
  v.hypothesis = "cyclic";
  compare(v, compress(t, m), compress(t, n), m, n, tol);
  return v;
}

IntertwinerSpace intertwiner_space(const RowTuple& source,
                                   const RowTuple& target,
                                   const Tolerance& tol) {
  if (source.size() != target.size()) {
    throw std::invalid_argument("intertwined tuples have different lengths");
  }
  IntertwinerSpace s;
  s.rows = target.dim();
  s.cols = source.dim();
  const Index unknowns = s.rows * s.cols;
  if (unknowns == 0) {
    return s;
  }
  // vec(X S_k - T_k X) = (S_k^T (x) I - I (x) T_k) vec(X), column-major vec.
  Matrix system = Matrix::Zero(unknowns * source.size(), unknowns);
  for (int k = 0; k < source.size(); ++k) {
    auto block = system.middleRows(k * unknowns, unknowns);
    const Matrix& sk = source[k];
    const Matrix& tk = target[k];
    for (Index q = 0; q < s.cols; ++q) {
      for (Index p = 0; p < s.cols; ++p) {
        if (sk(p, q) != Complex(0)) {
          block.block(q * s.rows, p * s.rows, s.rows, s.rows) +=
              sk(p, q) * identity(s.rows);
        }
      }
      block.block(q * s.rows, q * s.rows, s.rows, s.rows) -= tk;
    }
  }
  const RankKernel rk = rank_and_kernel(system, tol);
  for (Index j = 0; j < rk.kernel.cols(); ++j) {
    s.basis.push_back(rk.kernel.col(j).reshaped(s.rows, s.cols));
  }
  return s;
}

namespace {

Matrix vec_stack(const std::vector<Matrix>& mats) {
  const Index len = mats.empty() ? 0 : mats[0].size();
  Matrix v(len, static_cast<Index>(mats.size()));
  for (Index j = 0; j < v.cols(); ++j) {
    v.col(j) = mats[j].reshaped();
  }
  return v;
}

// Newton iteration for the matrix sign function.
std::optional<Matrix> matrix_sign(const Matrix& z) {
  Matrix s = z;
  for (int it = 0; it < 100; ++it) {
    Eigen::PartialPivLU<Matrix> lu(s);
    Matrix next = (s + lu.inverse()) / 2.0;
    if (!all_finite(next)) {
      return std::nullopt;
    }
    const double step = (next - s).norm();
    s = std::move(next);
    if (step <= 1e-14 * s.norm()) {
      return s;
    }
  }
  return std::nullopt;
}

bool idempotent_ok(const Matrix& e, const RowTuple& t, const Tolerance& tol) {
  const Index n = t.dim();
  if ((e * e - e).norm() > 1e-9) {
    return false;
  }
  for (const auto& tk : t.matrices()) {
    if ((e * tk - tk * e).norm() > 1e-9) {
      return false;
    }
  }
  const Index r = numerical_rank(e, tol);
  return r > 0 && r < n;
}

std::optional<Matrix> spectral_idempotent(const std::vector<Matrix>& basis,
                                          const RowTuple& t, Rng& rng,
                                          const Tolerance& tol) {
  const Index n = t.dim();
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Vector g = random_vector(static_cast<Index>(basis.size()), rng);
    Matrix a = Matrix::Zero(n, n);
    for (Index i = 0; i < g.size(); ++i) {
      a += g(i) * basis[i];
    }
    a *= std::polar(1.0, angle(rng));
    Eigen::ComplexEigenSolver<Matrix> es(a, false);
    std::vector<double> re;
    for (Index i = 0; i < n; ++i) {
      re.push_back(es.eigenvalues()(i).real());
    }
    std::sort(re.begin(), re.end());
    double gap = 0;
    double split = 0;
    for (std::size_t i = 1; i < re.size(); ++i) {
      if (re[i] - re[i - 1] > gap) {
        gap = re[i] - re[i - 1];
        split = (re[i] + re[i - 1]) / 2;
      }
    }
    if (gap <= 1e-6 * std::max(1.0, re.back() - re.front())) {
      continue;
    }
    const auto sign = matrix_sign(a - split * identity(n));
    if (!sign) {
      continue;
    }
    Matrix e = (identity(n) + *sign) / 2.0;
    for (int polish = 0; polish < 3; ++polish) {
      const Matrix e2 = e * e;
      e = 3.0 * e2 - 2.0 * e2 * e;
    }
    if (idempotent_ok(e, t, tol)) {
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace

DecompositionCertificate decomposition_exists(const RowTuple& t,
                                              std::uint64_t seed,
                                              const Tolerance& tol) {
  DecompositionCertificate c;
  if (t.dim() <= 1) {
    c.commutant_dim = t.dim();
    return c;
  }
  const IntertwinerSpace comm = intertwiner_space(t, t, tol);
  const Index dim = comm.dimension();
  c.commutant_dim = dim;
  const Matrix v = vec_stack(comm.basis);  // orthonormal columns
  std::vector<Matrix> left;
  for (Index i = 0; i < dim; ++i) {
    Matrix l(dim, dim);
    for (Index j = 0; j < dim; ++j) {
      l.col(j) = v.adjoint() * (comm.basis[i] * comm.basis[j]).reshaped();
    }
    left.push_back(std::move(l));
  }
  Matrix form(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      form(i, j) = (left[i] * left[j]).trace();
    }
  }
  c.radical_dim = rank_and_kernel(form, tol).kernel.cols();
  c.exists = dim - c.radical_dim > 1;
  if (c.exists) {
    Rng rng(seed);
    c.idempotent = spectral_idempotent(comm.basis, t, rng, tol);
    if (!c.idempotent) {
      throw NumericalError("no idempotent certificate could be built");
    }
  }
  return c;
}

std::vector<Subspace> indecomposable_summands(const RowTuple& t,
                                              std::uint64_t seed,
                                              const Tolerance& tol) {
  const Index n = t.dim();
  const DecompositionCertificate c = decomposition_exists(t, seed, tol);
  if (!c.exists) {
    return {Subspace::full(n)};
  }
  const Matrix& e = *c.idempotent;
  std::vector<Subspace> out;
  std::uint64_t child = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (const Matrix& part : {e, Matrix(identity(n) - e)}) {
    const Subspace range(n, column_space(part, tol));
    const RowTuple sub = restrict(t, range, tol);
    for (const auto& piece : indecomposable_summands(sub, ++child, tol)) {
      out.emplace_back(n, range.frame() * piece.frame(), tol);
    }
  }
  return out;
}

namespace {

bool has_cyclic_vector(const RowTuple& t, Rng& rng, const Tolerance& tol) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (is_cyclic(t, random_vector(t.dim(), rng), tol)) {
      return true;
    }
  }
  return false;
}

Subspace span_of(const std::vector<Subspace>& parts, Index n,
                 const Tolerance& tol) {
  Index cols = 0;
  for (const auto& p : parts) {
    cols += p.dimension();
  }
  Matrix m(n, cols);
  Index at = 0;
  for (const auto& p : parts) {
    m.middleCols(at, p.dimension()) = p.frame();
    at += p.dimension();
  }
  return Subspace(n, m, tol);
}

}  // namespace

std::optional<Decomposition> decomposition_find(const RowTuple& t,
                                                bool want_cyclic,
                                                std::uint64_t seed,
                                                const Tolerance& tol) {
  const auto parts = indecomposable_summands(t, seed, tol);
  if (parts.size() < 2) {
    return std::nullopt;
  }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (want_cyclic && !has_cyclic_vector(restrict(t, parts[i], tol), rng, tol)) {
      continue;
    }
    std::vector<Subspace> rest;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) {
        rest.push_back(parts[j]);
      }
    }
    return Decomposition{parts[i], span_of(rest, t.dim(), tol)};
  }
  return std::nullopt;
}

SplitResult splitting_construct(const RowTuple& t, const Subspace& m,
                                std::uint64_t seed, const Tolerance& tol) {
  const std::string failed = nilpotent_failure(t, tol);
  if (!failed.empty()) {
    throw HypothesisError(failed, "splitting needs a commuting nilpotent tuple");
  }
  check_ambient(t, m);
  if (!is_invariant(t, m, tol)) {
    throw HypothesisError("invariant", "M is not invariant");
  }
  SplitResult r;
  if (m.is_full()) {
    r.n = Subspace::zero(t.dim());
    r.degenerate = true;
    return r;
  }
  const RowTuple a = restrict(t, m, tol);
  if (!same_ideal(annihilator(a, tol), annihilator(t, tol))) {
    throw HypothesisError("annihilator_equality",
                          "Ann(T|M) differs from Ann(T)");
  }
  const RowTuple a_star = a.adjoint();
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Vector xi = random_vector(a.dim(), rng);
    if (!is_cyclic(a_star, xi, tol)) {
      continue;
    }
    r.xi = m.frame() * xi;
    r.n = krylov(t.adjoint(), r.xi, tol).complement();
    return r;
  }
  throw HypothesisError("adjoint_cyclic",
                        "no cyclic vector found for the adjoint restriction");
}

}  // namespace drury
