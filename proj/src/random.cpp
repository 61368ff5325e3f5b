#include "drury/random.hpp"

#include <algorithm>
#include <cmath>

#include "drury/errors.hpp"
#include "drury/subspaces.hpp"
#include "drury/vectors.hpp"

namespace drury {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

// Random polynomial with 1..3 terms of degree in [1, max_degree].
Polynomial random_polynomial(int d, int max_degree, Rng& rng) {
  Polynomial p(d);
  const int terms = uniform_int(rng, 1, 3);
  for (int i = 0; i < terms; ++i) {
    const int deg = uniform_int(rng, 1, max_degree);
    const auto candidates = monomials_of_degree(d, deg);
    const auto& alpha =
        candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
    p.add_term(alpha, gaussian(rng));
  }
  return p;
}

}  // namespace

Vector random_vector(Index n, Rng& rng) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) {
    v(i) = gaussian(rng);
  }
  return v;
}

Matrix random_matrix(Index rows, Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      m(i, j) = gaussian(rng);
    }
  }
  return m;
}

Matrix random_unitary(Index n, Rng& rng) {
  const Matrix g = random_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) {
      q.col(j) *= r(j, j) / a;
    }
  }
  return q;
}

Matrix random_well_conditioned(Index n, Rng& rng, double lo, double hi) {
  Eigen::VectorXd s(n);
  for (Index i = 0; i < n; ++i) {
    s(i) = uniform_real(rng, lo, hi);
  }
  const Matrix q1 = random_unitary(n, rng);
  const Matrix q2 = random_unitary(n, rng);
  return q1 * s.cast<Complex>().asDiagonal() * q2;
}

RowTuple contractive_rescale(const RowTuple& t) {
  if (t.dim() == 0) {
    return t;
  }
  Matrix s = t.row_sum();
  s = (s + s.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 1.0 ? t.scaled(1.0 / std::sqrt(top)) : t;
}

AnnihilatorBasis random_nilpotent_ideal(int d, Index max_delta, Rng& rng,
                                        Index min_delta) {
  int m_cap = 1;
  while (count_monomials_up_to(d, m_cap) <= 3 * max_delta) {
    ++m_cap;
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int m = uniform_int(rng, 1, m_cap);
    std::vector<Polynomial> gens;
    if (m >= 2) {
      const int count = uniform_int(rng, 0, 3);
      for (int i = 0; i < count; ++i) {
        gens.push_back(random_polynomial(d, m - 1, rng));
      }
    }
    auto ann = AnnihilatorBasis::from_generators(d, m, gens);
    const Index delta = ann.ambient_dimension() - ann.dimension();
    if (delta >= min_delta && delta <= max_delta) {
      return ann;
    }
  }
  throw NumericalError("random ideal rejection sampling failed");
}

RowTuple random_similar_model(const AnnihilatorBasis& ideal, Rng& rng) {
  const RowTuple m = model_of(ideal);
  return contractive_rescale(m.similar(random_well_conditioned(m.dim(), rng)));
}

RowTuple random_cyclic_nilpotent(Rng& rng, Index max_delta) {
  const int d = uniform_int(rng, 1, 3);
  const auto ideal = random_nilpotent_ideal(d, max_delta, rng);
  if (uniform_int(rng, 0, 1) == 0) {
    return model_of(ideal);
  }
  return random_similar_model(ideal, rng);
}

RowTuple random_adjoint_cyclic(Rng& rng, Index max_delta) {
  return contractive_rescale(random_cyclic_nilpotent(rng, max_delta).adjoint());
}

RowTuple random_nilpotent_tuple(Rng& rng, Index max_dim) {
  const int d = uniform_int(rng, 1, 3);
  const int kind = uniform_int(rng, 0, 7);
  auto model = [&](Index cap) {
    return model_of(random_nilpotent_ideal(d, cap, rng));
  };
  switch (kind) {
    case 0:
      return model(max_dim);
    case 1:
      return random_similar_model(random_nilpotent_ideal(d, max_dim, rng), rng);
    case 2:
    case 6: {
      if (max_dim < 2) {
        return model(max_dim);
      }
      const RowTuple a = model(max_dim - 1);
      const RowTuple b = model(max_dim - a.dim());
      const RowTuple sum = direct_sum(a, b);
      if (kind == 2) {
        return sum;
      }
      return contractive_rescale(
          sum.similar(random_well_conditioned(sum.dim(), rng)));
    }
    case 3:
      return contractive_rescale(
          random_similar_model(random_nilpotent_ideal(d, max_dim, rng), rng)
              .adjoint());
    case 4: {
      const RowTuple t = model(max_dim);
      const Subspace c = random_coinvariant(t, rng);
      return c.is_zero() ? t : compress(t, c);
    }
    case 5: {
      const RowTuple t = random_similar_model(
          random_nilpotent_ideal(d, max_dim + 2, rng), rng);
      const Subspace m = random_invariant(t, rng);
      if (m.is_zero() || m.dimension() > max_dim) {
        return model(max_dim);
      }
      return restrict(t, m);
    }
    default: {
      // Polynomials without constant term in one strictly lower triangular A.
      const Index n = uniform_int(rng, 1, static_cast<int>(max_dim));
      Matrix a = random_matrix(n, n, rng).triangularView<Eigen::StrictlyLower>();
      std::vector<Matrix> mats;
      for (int k = 0; k < d; ++k) {
        const Polynomial p =
            random_polynomial(1, std::max<int>(1, static_cast<int>(n) - 1), rng);
        mats.push_back(poly_eval(p, RowTuple({a})));
      }
      return contractive_rescale(RowTuple(std::move(mats)));
    }
  }
}

namespace {

Matrix pushed_seeds(const RowTuple& t, int count, Rng& rng) {
  Matrix s = Matrix::Zero(t.dim(), count);
  for (int j = 0; j < count; ++j) {
    for (int k = 0; k < t.size(); ++k) {
      s.col(j) += t[k] * random_vector(t.dim(), rng);
    }
  }
  return s;
}

Matrix mixed_seeds(const RowTuple& t, Rng& rng) {
  const int count = uniform_int(rng, 1, 2);
  if (uniform_int(rng, 0, 1) == 0) {
    return pushed_seeds(t, count, rng);
  }
  return random_matrix(t.dim(), count, rng);
}

}  // namespace

Subspace random_proper_invariant(const RowTuple& t, Rng& rng) {
  return generated_invariant(t, pushed_seeds(t, uniform_int(rng, 1, 2), rng));
}

Subspace random_invariant(const RowTuple& t, Rng& rng) {
  return generated_invariant(t, mixed_seeds(t, rng));
}

Subspace random_coinvariant(const RowTuple& t, Rng& rng) {
  const RowTuple a = t.adjoint();
  return generated_invariant(a, mixed_seeds(a, rng));
}

SplittingInstance random_splitting_instance(Rng& rng, Index max_delta) {
  const int d = uniform_int(rng, 1, 3);
  const AnnihilatorBasis j = random_nilpotent_ideal(d, max_delta, rng);
  std::vector<Polynomial> bigger = j.polynomials();
  if (uniform_int(rng, 0, 1) == 1 && j.degree_bound >= 2) {
    bigger.push_back(random_polynomial(d, j.degree_bound - 1, rng));
  }
  const AnnihilatorBasis j2 =
      AnnihilatorBasis::from_generators(d, j.degree_bound, bigger);
  RowTuple b = model_of(j).adjoint();
  RowTuple a = model_of(j2).adjoint();
  if (uniform_int(rng, 0, 1) == 1) {
    a = a.similar(random_well_conditioned(a.dim(), rng));
  }
  const RowTuple sum = direct_sum(a, b);
  const Matrix u = random_unitary(sum.dim(), rng);
  SplittingInstance inst;
  inst.t = contractive_rescale(sum.sandwich(u, u.adjoint()));
  Matrix m = Matrix::Zero(sum.dim(), b.dim());
  m.bottomRows(b.dim()) = identity(b.dim());
  inst.m = Subspace(sum.dim(), u * m);
  return inst;
}

}  // namespace drury
