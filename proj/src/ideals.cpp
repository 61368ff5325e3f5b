#include "drury/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "drury/errors.hpp"
#include "drury/fock.hpp"

namespace drury {

namespace {

using IndexMap = std::map<MultiIndex, Index, GradedOrder>;

IndexMap index_map(const std::vector<MultiIndex>& monomials) {
  IndexMap m;
  for (Index i = 0; i < static_cast<Index>(monomials.size()); ++i) {
    m.emplace(monomials[i], i);
  }
  return m;
}

// Coefficients of p over `monomials`; terms outside the list are dropped.
Vector coefficient_vector(const Polynomial& p, const IndexMap& index,
                          Index size) {
  Vector v = Vector::Zero(size);
  for (const auto& [alpha, c] : p.terms()) {
    auto it = index.find(alpha);
    if (it != index.end()) {
      v(it->second) = c;
    }
  }
  return v;
}

Polynomial polynomial_from(const std::vector<MultiIndex>& monomials,
                           const Eigen::Ref<const Vector>& coeffs, int d) {
  Polynomial p(d);
  for (Index i = 0; i < coeffs.size(); ++i) {
    p.add_term(monomials[i], coeffs(i));
  }
  return p;
}

// Columns pi_{<=m}(q x^beta) for |beta| <= m.
void append_multiples(const Polynomial& q, int m,
                      const std::vector<MultiIndex>& monomials,
                      const IndexMap& index, std::vector<Vector>& out) {
  for (const auto& beta : monomials) {
    const Polynomial shifted = q * Polynomial::monomial(beta);
    if (shifted.is_zero() ||
        shifted.terms().begin()->first.degree() > m) {
      continue;
    }
    out.push_back(coefficient_vector(shifted.truncated(m), index,
                                     static_cast<Index>(monomials.size())));
  }
}

Matrix stack_columns(const std::vector<Vector>& cols, Index rows) {
  Matrix m(rows, static_cast<Index>(cols.size()));
  for (Index j = 0; j < m.cols(); ++j) {
    m.col(j) = cols[j];
  }
  return m;
}

}  // namespace

std::vector<Polynomial> AnnihilatorBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (Index i = 0; i < coefficients.rows(); ++i) {
    out.push_back(polynomial_from(monomials, coefficients.row(i).transpose(),
                                  variables));
  }
  return out;
}

AnnihilatorBasis AnnihilatorBasis::from_coefficient_span(int d,
                                                         int degree_bound,
                                                         const Matrix& columns,
                                                         const Tolerance& tol) {
  AnnihilatorBasis a;
  a.variables = d;
  a.degree_bound = degree_bound;
  a.monomials = monomials_up_to(d, degree_bound);
  if (columns.rows() != a.ambient_dimension()) {
    throw std::invalid_argument("coefficient span has wrong length");
  }
  a.frame = columns.cols() == 0 ? Matrix(columns.rows(), 0)
                                : orthonormalize(columns, tol);
  a.coefficients = a.frame.cols() == 0
                       ? Matrix(0, a.ambient_dimension())
                       : rref(a.frame.transpose());
  if (a.coefficients.rows() != a.frame.cols()) {
    // Echelon pivots disagreed with the orthonormal rank; trust the frame.
    a.coefficients = a.frame.transpose();
  }
  return a;
}

AnnihilatorBasis AnnihilatorBasis::from_generators(
    int d, int degree_bound, const std::vector<Polynomial>& generators,
    const Tolerance& tol) {
  if (degree_bound < 0) {
    throw std::invalid_argument("degree bound must be nonnegative");
  }
  const auto monomials = monomials_up_to(d, degree_bound);
  const auto index = index_map(monomials);
  const Index n = static_cast<Index>(monomials.size());
  std::vector<Vector> cols;
  for (const auto& g : generators) {
    if (g.variables() != d) {
      throw std::invalid_argument("generator has wrong number of variables");
    }
    append_multiples(g, degree_bound, monomials, index, cols);
  }
  for (const auto& alpha : monomials_of_degree(d, degree_bound)) {
    Vector e = Vector::Zero(n);
    e(index.at(alpha)) = 1.0;
    cols.push_back(e);
  }
  return from_coefficient_span(d, degree_bound, stack_columns(cols, n), tol);
}

AnnihilatorBasis AnnihilatorBasis::lifted(int new_bound) const {
  if (new_bound < degree_bound) {
    throw std::invalid_argument("cannot lower the degree bound");
  }
  if (new_bound == degree_bound) {
    return *this;
  }
  const auto big = monomials_up_to(variables, new_bound);
  const Index n = static_cast<Index>(big.size());
  const Index extra = n - ambient_dimension();
  // Graded order puts the old monomials first.
  Matrix cols = Matrix::Zero(n, frame.cols() + extra);
  cols.topLeftCorner(ambient_dimension(), frame.cols()) = frame;
  cols.bottomRightCorner(extra, extra) = identity(extra);
  return from_coefficient_span(variables, new_bound, cols);
}

bool AnnihilatorBasis::contains(const Polynomial& p, double rel_tol) const {
  const Vector v = coefficient_vector(p.truncated(degree_bound),
                                      index_map(monomials),
                                      ambient_dimension());
  const double size = v.norm();
  if (size == 0) {
    return true;
  }
  const Vector r = v - frame * (frame.adjoint() * v);
  return r.norm() <= rel_tol * size;
}

bool same_ideal(const AnnihilatorBasis& a, const AnnihilatorBasis& b,
                double threshold) {
  if (a.variables != b.variables) {
    return false;
  }
  const int m = std::max(a.degree_bound, b.degree_bound);
  const AnnihilatorBasis la = a.lifted(m);
  const AnnihilatorBasis lb = b.lifted(m);
  if (la.frame.cols() != lb.frame.cols()) {
    return false;
  }
  return subspace_distance(la.frame, lb.frame) < threshold;
}

bool ideal_contains(const AnnihilatorBasis& b, const AnnihilatorBasis& a,
                    double threshold) {
  if (a.variables != b.variables) {
    return false;
  }
  const int m = std::max(a.degree_bound, b.degree_bound);
  const AnnihilatorBasis la = a.lifted(m);
  const AnnihilatorBasis lb = b.lifted(m);
  if (la.frame.cols() == 0) {
    return true;
  }
  const Matrix r = la.frame - lb.frame * (lb.frame.adjoint() * la.frame);
  return operator_norm(r) < threshold;
}

AnnihilatorBasis annihilator(const RowTuple& t, const Tolerance& tol,
                             std::optional<int> degree_bound) {
  tol.check();
  const auto index = nilpotency_index(t, std::nullopt, tol);
  if (!index) {
    throw HypothesisError("nilpotent", "annihilator requires a nilpotent tuple");
  }
  int m = *index;
  if (degree_bound) {
    if (*degree_bound < m) {
      throw std::invalid_argument(
          "degree bound is below the nilpotency index");
    }
    m = *degree_bound;
  }
  const int d = t.size();
  const auto monomials = monomials_up_to(d, m);
  const Index n = static_cast<Index>(monomials.size());
  if (t.dim() == 0) {
    return AnnihilatorBasis::from_coefficient_span(d, m, identity(n), tol);
  }
  const Index dim = t.dim();
  MonomialCache cache(t);
  Matrix eval(dim * dim, n);
  for (Index j = 0; j < n; ++j) {
    eval.col(j) = cache.power(monomials[j]).reshaped();
  }
  const RankKernel rk = rank_and_kernel(eval, tol);
  return AnnihilatorBasis::from_coefficient_span(d, m, rk.kernel, tol);
}

std::vector<Polynomial> minimal_generators(const AnnihilatorBasis& ann,
                                           const Tolerance& tol) {
  auto candidates = ann.polynomials();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Polynomial& a, const Polynomial& b) {
                     return a.degree() < b.degree();
                   });
  const auto index = index_map(ann.monomials);
  const Index n = ann.ambient_dimension();
  std::vector<Polynomial> chosen;
  std::vector<Vector> cols;
  Matrix span(n, 0);
  for (const auto& q : candidates) {
    if (span.cols() == ann.dimension()) {
      break;
    }
    const Vector v = coefficient_vector(q, index, n);
    const Vector r = v - span * (span.adjoint() * v);
    if (r.norm() <= 1e-8 * v.norm()) {
      continue;
    }
    chosen.push_back(q);
    append_multiples(q, ann.degree_bound, ann.monomials, index, cols);
    span = orthonormalize(stack_columns(cols, n), tol);
  }
  return chosen;
}

Vector QuotientAlgebra::reduce(const Polynomial& p) const {
  if (p.variables() != variables) {
    throw std::invalid_argument("polynomial has wrong number of variables");
  }
  return reducer * coefficient_vector(p.truncated(degree_bound),
                                      index_map(monomials),
                                      static_cast<Index>(monomials.size()));
}

Polynomial QuotientAlgebra::lift(const Vector& coords) const {
  if (coords.size() != dimension()) {
    throw std::invalid_argument("quotient coordinates have wrong length");
  }
  return polynomial_from(basis, coords, variables);
}

QuotientAlgebra quotient_algebra(const AnnihilatorBasis& ann,
                                 const Tolerance& tol) {
  QuotientAlgebra q;
  q.variables = ann.variables;
  q.degree_bound = ann.degree_bound;
  q.monomials = ann.monomials;
  const Index n = ann.ambient_dimension();
  const Index delta = n - ann.frame.cols();
  Matrix span = ann.frame;
  std::vector<Index> chosen;
  const double cut = 100 * tol.rank_rel_tol;
  for (Index i = 0; i < n && static_cast<Index>(chosen.size()) < delta; ++i) {
    Vector r = Vector::Zero(n);
    r(i) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      r -= span * (span.adjoint() * r);
    }
    if (r.norm() > cut) {
      chosen.push_back(i);
      span.conservativeResize(Eigen::NoChange, span.cols() + 1);
      span.col(span.cols() - 1) = r / r.norm();
    }
  }
  if (static_cast<Index>(chosen.size()) != delta) {
    throw NumericalError("could not select a monomial basis of the quotient");
  }
  Matrix full(n, n);
  for (Index j = 0; j < delta; ++j) {
    full.col(j) = Vector::Unit(n, chosen[j]);
    q.basis.push_back(ann.monomials[chosen[j]]);
  }
  full.rightCols(n - delta) = ann.frame;
  Eigen::FullPivLU<Matrix> lu(full);
  q.reducer = lu.solve(identity(n)).topRows(delta);
  const auto index = index_map(q.monomials);
  for (Index i = 0; i < delta; ++i) {
    Matrix left(delta, delta);
    for (Index j = 0; j < delta; ++j) {
      const MultiIndex prod = q.basis[i] + q.basis[j];
      Vector v = Vector::Zero(n);
      auto it = index.find(prod);
      if (it != index.end()) {
        v(it->second) = 1.0;
      }
      left.col(j) = q.reducer * v;
    }
    q.mult_table.push_back(std::move(left));
  }
  return q;
}

std::vector<MultiIndex> omega_e(const RowTuple& t, const Tolerance& tol) {
  const auto index = nilpotency_index(t, std::nullopt, tol);
  if (!index) {
    throw HypothesisError("nilpotent", "omega_e requires a nilpotent tuple");
  }
  const int d = t.size();
  MonomialCache cache(t);
  std::vector<MultiIndex> out;
  for (const auto& alpha : monomials_up_to(d, std::max(0, *index - 1))) {
    const int deg = alpha.degree();
    if (cache.power(alpha).norm() <=
        tol.rank_rel_tol * monomial_scale(t, deg)) {
      continue;
    }
    bool socle = true;
    for (int k = 0; k < d && socle; ++k) {
      socle = cache.power(alpha + MultiIndex::unit(d, k)).norm() <=
              tol.rank_rel_tol * monomial_scale(t, deg + 1);
    }
    if (socle) {
      out.push_back(alpha);
    }
  }
  return out;
}

ModelSpace model_space(const AnnihilatorBasis& ann,
                       std::optional<int> degree_cap, const Tolerance& tol) {
  const int m = ann.degree_bound;
  const int cap = degree_cap.value_or(m);
  if (cap < m) {
    throw std::invalid_argument("model space cap is below the degree bound");
  }
  const int d = ann.variables;
  for (const auto& alpha : monomials_of_degree(d, m)) {
    if (!ann.contains(Polynomial::monomial(alpha))) {
      throw std::invalid_argument(
          "model space needs every monomial of the bound degree in the ideal");
    }
  }
  const TruncatedDA da(d, cap);
  const Index low = m == 0 ? 0 : count_monomials_up_to(d, m - 1);
  std::vector<Vector> cols;
  for (const auto& q : ann.polynomials()) {
    for (const auto& beta : ann.monomials) {
      const Polynomial r = (q * Polynomial::monomial(beta)).truncated(m - 1);
      if (!r.is_zero()) {
        cols.push_back(da.coordinates(r).head(low));
      }
    }
  }
  const Matrix ideal_part = cols.empty() ? Matrix(low, 0)
                                         : orthonormalize(stack_columns(cols, low), tol);
  Matrix frame(low, 0);
  const double cut = 100 * tol.rank_rel_tol;
  for (Index i = 0; i < low; ++i) {
    Vector v = Vector::Unit(low, i);
    for (int pass = 0; pass < 2; ++pass) {
      v -= ideal_part * (ideal_part.adjoint() * v);
      v -= frame * (frame.adjoint() * v);
    }
    if (v.norm() > cut) {
      frame.conservativeResize(Eigen::NoChange, frame.cols() + 1);
      frame.col(frame.cols() - 1) = v / v.norm();
    }
  }
  ModelSpace s;
  s.variables = d;
  s.degree_cap = cap;
  s.monomials = da.basis();
  s.frame = Matrix::Zero(da.dimension(), frame.cols());
  s.frame.topRows(low) = frame;
  return s;
}

RowTuple model_tuple(const ModelSpace& space) {
  const TruncatedDA da(space.variables, space.degree_cap);
  std::vector<Matrix> mats;
  for (int k = 0; k < space.variables; ++k) {
    const Matrix mk =
        multiplication_matrix(Polynomial::variable(space.variables, k), da);
    mats.push_back(space.frame.adjoint() * mk * space.frame);
  }
  return RowTuple(std::move(mats));
}

RowTuple model_of(const AnnihilatorBasis& ann, const Tolerance& tol) {
  return model_tuple(model_space(ann, std::nullopt, tol));
}

}  // namespace drury
