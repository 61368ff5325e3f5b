#include "drury/tuples.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drury/errors.hpp"

namespace drury {

RowTuple::RowTuple(std::vector<Matrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) {
    throw std::invalid_argument("a tuple needs at least one matrix");
  }
  dim_ = mats_[0].rows();
  for (const auto& m : mats_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument("tuple matrices must be square of one size");
    }
    if (!all_finite(m)) {
      throw std::invalid_argument("tuple matrices must be finite");
    }
  }
}

RowTuple RowTuple::zero(int d, Index dim) {
  if (d < 1 || dim < 0) {
    throw std::invalid_argument("invalid zero tuple shape");
  }
  return RowTuple(std::vector<Matrix>(d, Matrix::Zero(dim, dim)));
}

RowTuple RowTuple::adjoint() const {
  std::vector<Matrix> out;
  for (const auto& m : mats_) {
    out.push_back(m.adjoint());
  }
  return RowTuple(std::move(out));
}

RowTuple RowTuple::scaled(Complex c) const {
  std::vector<Matrix> out;
  for (const auto& m : mats_) {
    out.push_back(c * m);
  }
  return RowTuple(std::move(out));
}

RowTuple RowTuple::similar(const Matrix& s) const {
  if (s.rows() != dim_ || s.cols() != dim_) {
    throw std::invalid_argument("similarity has wrong size");
  }
  const Matrix inv = Eigen::PartialPivLU<Matrix>(s).inverse();
  std::vector<Matrix> out;
  for (const auto& m : mats_) {
    out.push_back(s * m * inv);
  }
  return RowTuple(std::move(out));
}

RowTuple RowTuple::sandwich(const Matrix& a, const Matrix& b) const {
  if (a.cols() != dim_ || b.rows() != dim_ || a.rows() != b.cols()) {
    throw std::invalid_argument("sandwich factors have wrong shapes");
  }
  std::vector<Matrix> out;
  for (const auto& m : mats_) {
    out.push_back(a * m * b);
  }
  return RowTuple(std::move(out));
}

double RowTuple::max_norm() const {
  double best = 0;
  for (const auto& m : mats_) {
    best = std::max(best, operator_norm(m));
  }
  return best;
}

Matrix RowTuple::row_sum() const {
  Matrix s = Matrix::Zero(dim_, dim_);
  for (const auto& m : mats_) {
    s += m * m.adjoint();
  }
  return s;
}

RowTuple direct_sum(const RowTuple& a, const RowTuple& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("direct sum of tuples of different lengths");
  }
  std::vector<Matrix> out;
  for (int k = 0; k < a.size(); ++k) {
    Matrix m = Matrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
    m.topLeftCorner(a.dim(), a.dim()) = a[k];
    m.bottomRightCorner(b.dim(), b.dim()) = b[k];
    out.push_back(std::move(m));
  }
  return RowTuple(std::move(out));
}

double commutator_norm(const RowTuple& t) {
  double best = 0;
  for (int j = 0; j < t.size(); ++j) {
    for (int k = j + 1; k < t.size(); ++k) {
      best = std::max(best, operator_norm(t[j] * t[k] - t[k] * t[j]));
    }
  }
  return best;
}

bool is_commuting(const RowTuple& t, const Tolerance& tol) {
  return commutator_norm(t) <= tol.rank_rel_tol * monomial_scale(t, 2);
}

double monomial_scale(const RowTuple& t, int degree) {
  return std::pow(std::max(1.0, t.max_norm()), degree);
}

const char* to_string(Purity p) {
  switch (p) {
    case Purity::Pure:
      return "pure";
    case Purity::NotPure:
      return "not_pure";
    case Purity::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

PurityResult purity(const RowTuple& t, const Tolerance& tol) {
  tol.check();
  if (!psd_below_identity(t.row_sum(), tol)) {
    throw HypothesisError("row_contraction",
                          "purity requires a row contraction");
  }
  PurityResult r;
  Matrix x = identity(t.dim());
  r.last_norm = t.dim() == 0 ? 0.0 : 1.0;
  if (r.last_norm < tol.iter_tol) {
    r.verdict = Purity::Pure;
    return r;
  }
  for (int n = 1; n <= tol.max_iter; ++n) {
    Matrix next = Matrix::Zero(t.dim(), t.dim());
    for (const auto& m : t.matrices()) {
      next += m * x * m.adjoint();
    }
    next = (next + next.adjoint()) / 2.0;
    r.iterations = n;
    r.last_norm = operator_norm(next);
    if (r.last_norm < tol.iter_tol) {
      r.verdict = Purity::Pure;
      return r;
    }
    // Phi^n(I) decreases, so a stalled iterate has reached a nonzero limit.
    const double step = operator_norm(next - x);
    if (step <= tol.iter_tol * r.last_norm && r.last_norm > 1e-6) {
      r.verdict = Purity::NotPure;
      return r;
    }
    x = std::move(next);
  }
  r.verdict = Purity::Indeterminate;
  return r;
}

TupleReport validate(const RowTuple& t, const Tolerance& tol) {
  tol.check();
  TupleReport r;
  r.commutator_norm = commutator_norm(t);
  r.commuting = r.commutator_norm <= tol.rank_rel_tol * monomial_scale(t, 2);
  r.row_sum = t.row_sum();
  r.row_sum = (r.row_sum + r.row_sum.adjoint()) / 2.0;
  r.row_contraction = psd_below_identity(r.row_sum, tol);
  r.defect_operator = identity(t.dim()) - r.row_sum;
  r.defect = numerical_rank(r.defect_operator, tol);
  if (r.commuting) {
    r.nilpotent = nilpotency_index(t, std::nullopt, tol);
  }
  if (r.row_contraction) {
    r.purity = r.nilpotent ? Purity::Pure : purity(t, tol).verdict;
  }
  return r;
}

std::optional<int> nilpotency_index(const RowTuple& t, std::optional<int> cap,
                                    const Tolerance& tol) {
  if (!is_commuting(t, tol)) {
    throw HypothesisError("commuting", "nilpotency requires a commuting tuple");
  }
  const int limit = cap.value_or(static_cast<int>(t.dim()) + 1);
  const int d = t.size();
  if (t.dim() == 0) {
    return 0;
  }
  std::map<MultiIndex, Matrix, GradedOrder> layer;
  layer.emplace(MultiIndex::zero(d), identity(t.dim()));
  for (int m = 1; m <= limit; ++m) {
    std::map<MultiIndex, Matrix, GradedOrder> next;
    bool all_zero = true;
    const double cut = tol.rank_rel_tol * monomial_scale(t, m);
    for (const auto& [alpha, power] : layer) {
      for (int k = 0; k < d; ++k) {
        MultiIndex beta = alpha + MultiIndex::unit(d, k);
        if (next.count(beta) != 0) {
          continue;
        }
        Matrix p = t[k] * power;
        if (p.norm() > cut) {
          all_zero = false;
        }
        next.emplace(std::move(beta), std::move(p));
      }
    }
    if (all_zero) {
      return m;
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

MonomialCache::MonomialCache(RowTuple t) : t_(std::move(t)) {}

const Matrix& MonomialCache::power(const MultiIndex& alpha) {
  if (alpha.variables() != t_.size()) {
    throw std::invalid_argument("multi-index has wrong number of variables");
  }
  auto it = cache_.find(alpha);
  if (it != cache_.end()) {
    return it->second;
  }
  Matrix value;
  if (alpha.degree() == 0) {
    value = identity(t_.dim());
  } else {
    int k = 0;
    while (alpha.exponents[k] == 0) {
      ++k;
    }
    const MultiIndex rest = alpha - MultiIndex::unit(t_.size(), k);
    value = t_[k] * power(rest);
  }
  return cache_.emplace(alpha, std::move(value)).first->second;
}

Matrix poly_eval(const Polynomial& p, MonomialCache& cache) {
  if (p.variables() != cache.tuple().size()) {
    throw std::invalid_argument("polynomial and tuple have different d");
  }
  const Index n = cache.tuple().dim();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [alpha, c] : p.terms()) {
    out += c * cache.power(alpha);
  }
  return out;
}

Matrix poly_eval(const Polynomial& p, const RowTuple& t) {
  MonomialCache cache(t);
  return poly_eval(p, cache);
}

Matrix word_eval(const Word& w, const RowTuple& t) {
  Matrix out = identity(t.dim());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it < 1 || *it > t.size()) {
      throw std::out_of_range("word letter out of range");
    }
    out = t[*it - 1] * out;
  }
  return out;
}

}  // namespace drury
