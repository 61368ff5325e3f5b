#include "drury/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace drury {

TruncatedDA::TruncatedDA(int d, int degree_cap)
    : d_(d), cap_(degree_cap), basis_(monomials_up_to(d, degree_cap)) {
  if (degree_cap < 0) {
    throw std::invalid_argument("degree cap must be nonnegative");
  }
  for (Index i = 0; i < dimension(); ++i) {
    index_.emplace(basis_[i], i);
  }
}

std::optional<Index> TruncatedDA::index_of(const MultiIndex& alpha) const {
  auto it = index_.find(alpha);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Vector TruncatedDA::coordinates(const Polynomial& p) const {
  if (p.variables() != d_) {
    throw std::invalid_argument("polynomial has wrong number of variables");
  }
  Vector v = Vector::Zero(dimension());
  for (const auto& [a, c] : p.terms()) {
    if (auto i = index_of(a)) {
      v(*i) = c * da_monomial_norm(a);
    }
  }
  return v;
}

Polynomial TruncatedDA::polynomial(const Vector& coords) const {
  if (coords.size() != dimension()) {
    throw std::invalid_argument("coordinate vector has wrong length");
  }
  Polynomial p(d_);
  for (Index i = 0; i < dimension(); ++i) {
    p.add_term(basis_[i], coords(i) / da_monomial_norm(basis_[i]));
  }
  return p;
}

TruncatedFock::TruncatedFock(int d, int degree_cap) : d_(d), cap_(degree_cap) {
  if (d < 1 || degree_cap < 0) {
    throw std::invalid_argument("invalid truncated Fock space parameters");
  }
  offsets_.push_back(0);
  Index power = 1;
  for (int s = 0; s <= cap_; ++s) {
    powers_.push_back(power);
    offsets_.push_back(offsets_.back() + power);
    power *= d_;
  }
}

int TruncatedFock::length_of(Index i) const {
  if (i < 0 || i >= dimension()) {
    throw std::out_of_range("word index out of range");
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

Word TruncatedFock::word(Index i) const {
  const int s = length_of(i);
  Index r = i - offsets_[s];
  Word w;
  w.letters.assign(s, 1);
  for (int pos = s - 1; pos >= 0; --pos) {
    w.letters[pos] = static_cast<int>(r % d_) + 1;
    r /= d_;
  }
  return w;
}

Index TruncatedFock::index_of(const Word& w) const {
  const int s = w.length();
  if (s > cap_) {
    throw std::out_of_range("word longer than the truncation");
  }
  Index r = 0;
  for (int letter : w.letters) {
    if (letter < 1 || letter > d_) {
      throw std::out_of_range("word letter out of range");
    }
    r = r * d_ + (letter - 1);
  }
  return offsets_[s] + r;
}

std::optional<Index> TruncatedFock::prepend(int k, Index i) const {
  if (k < 1 || k > d_) {
    throw std::out_of_range("creation index out of range");
  }
  const int s = length_of(i);
  if (s >= cap_) {
    return std::nullopt;
  }
  return offsets_[s + 1] + (k - 1) * powers_[s] + (i - offsets_[s]);
}

double da_monomial_norm(const MultiIndex& alpha) {
  return 1.0 / std::sqrt(alpha.multinomial());
}

Complex da_kernel(std::span<const Complex> z, std::span<const Complex> w) {
  if (z.size() != w.size()) {
    throw std::invalid_argument("kernel points have different dimensions");
  }
  double nz = 0;
  double nw = 0;
  Complex inner = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    nz += std::norm(z[i]);
    nw += std::norm(w[i]);
    inner += z[i] * std::conj(w[i]);
  }
  if (nz >= 1.0 || nw >= 1.0) {
    throw std::invalid_argument("kernel points must lie in the open unit ball");
  }
  return 1.0 / (1.0 - inner);
}

Matrix multiplication_matrix(const Polynomial& p, const TruncatedDA& space) {
  if (p.variables() != space.variables()) {
    throw std::invalid_argument(
        "multiplication_matrix: polynomial and space have different variable "
        "counts");
  }
  const Index n = space.dimension();
  Matrix m = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    const MultiIndex& alpha = space.basis()[j];
    const double source_norm = da_monomial_norm(alpha);
    for (const auto& [gamma, c] : p.terms()) {
      const MultiIndex beta = alpha + gamma;
      if (auto i = space.index_of(beta)) {
        m(*i, j) += c * (da_monomial_norm(beta) / source_norm);
      }
    }
  }
  return m;
}

namespace {

// Block of M_p from degree k to degree k + s for homogeneous p of degree s.
Matrix homogeneous_block(const Polynomial& p, int k) {
  const int d = p.variables();
  const int s = p.degree();
  const auto sources = monomials_of_degree(d, k);
  const auto targets = monomials_of_degree(d, k + s);
  std::map<MultiIndex, Index, GradedOrder> target_index;
  for (Index i = 0; i < static_cast<Index>(targets.size()); ++i) {
    target_index.emplace(targets[i], i);
  }
  Matrix b = Matrix::Zero(static_cast<Index>(targets.size()),
                          static_cast<Index>(sources.size()));
  for (Index j = 0; j < static_cast<Index>(sources.size()); ++j) {
    const double source_norm = da_monomial_norm(sources[j]);
    for (const auto& [gamma, c] : p.terms()) {
      const MultiIndex beta = sources[j] + gamma;
      b(target_index.at(beta), j) += c * (da_monomial_norm(beta) / source_norm);
    }
  }
  return b;
}

}  // namespace

double truncated_multiplier_norm(const Polynomial& p, int N) {
  if (N < 0) {
    throw std::invalid_argument("degree cap must be nonnegative");
  }
  if (p.is_zero()) {
    return 0.0;
  }
  if (p.is_homogeneous()) {
    const int s = p.degree();
    if (s == 0) {
      return std::abs(p.terms().begin()->second);
    }
    // M_p maps degree k into degree k + s, so the compression is a direct sum
    // of these blocks and its norm is the largest block norm.
    double best = 0;
    for (int k = 0; k + s <= N; ++k) {
      best = std::max(best, operator_norm(homogeneous_block(p, k)));
    }
    return best;
  }
  return operator_norm(multiplication_matrix(p, TruncatedDA(p.variables(), N)));
}

MultiplierNormSequence multiplier_norm_sequence(const Polynomial& p, int first,
                                                int last,
                                                double stabilization_tol) {
  if (first < 0 || last < first) {
    throw std::invalid_argument("invalid degree range");
  }
  MultiplierNormSequence seq;
  for (int n = first; n <= last; ++n) {
    seq.degrees.push_back(n);
    seq.norms.push_back(truncated_multiplier_norm(p, n));
  }
  for (std::size_t i = 1; i < seq.norms.size(); ++i) {
    bool flat = true;
    for (std::size_t j = i; j < seq.norms.size(); ++j) {
      if (seq.norms[j] - seq.norms[j - 1] > stabilization_tol) {
        flat = false;
        break;
      }
    }
    if (flat) {
      seq.stabilized_at = seq.degrees[i - 1];
      break;
    }
  }
  return seq;
}

Matrix creation_matrix(int k, const TruncatedFock& space) {
  if (k < 1 || k > space.variables()) {
    throw std::out_of_range("creation index out of range");
  }
  const Index n = space.dimension();
  Matrix m = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    if (auto i = space.prepend(k, j)) {
      m(*i, j) = 1.0;
    }
  }
  return m;
}

Matrix symmetrization_map(const TruncatedFock& space) {
  const TruncatedDA da(space.variables(), space.degree_cap());
  Matrix u = Matrix::Zero(space.dimension(), da.dimension());
  for (Index i = 0; i < space.dimension(); ++i) {
    const MultiIndex alpha = space.word(i).abelianize(space.variables());
    const Index j = *da.index_of(alpha);
    u(i, j) = 1.0 / std::sqrt(alpha.multinomial());
  }
  return u;
}

Polynomial GleasonDecomposition::reassemble(std::span<const Complex> w) const {
  std::vector<Complex> minus_w(w.begin(), w.end());
  for (auto& v : minus_w) {
    v = -v;
  }
  Polynomial total = taylor;
  for (const auto& [alpha, phi] : remainders) {
    total = total + Polynomial::monomial(alpha).shifted(minus_w) * phi;
  }
  return total;
}

GleasonDecomposition gleason_decompose(const Polynomial& p,
                                       std::span<const Complex> w, int n) {
  const int d = p.variables();
  if (static_cast<int>(w.size()) != d) {
    throw std::invalid_argument("expansion point has wrong dimension");
  }
  if (n < 1) {
    throw std::invalid_argument("expansion order must be at least 1");
  }
  std::vector<Complex> minus_w(w.begin(), w.end());
  for (auto& v : minus_w) {
    v = -v;
  }
  // In y = x - w the coefficients of p(y + w) are the Taylor coefficients.
  const Polynomial local = p.shifted(w);
  Polynomial taylor_local(d);
  std::map<MultiIndex, Polynomial, GradedOrder> rem_local;
  for (const auto& alpha : monomials_of_degree(d, n)) {
    rem_local.emplace(alpha, Polynomial(d));
  }
  for (const auto& [beta, c] : local.terms()) {
    if (beta.degree() < n) {
      taylor_local.add_term(beta, c);
      continue;
    }
    MultiIndex alpha = MultiIndex::zero(d);
    int left = n;
    for (int i = 0; i < d; ++i) {
      alpha.exponents[i] = std::min(beta.exponents[i], left);
      left -= alpha.exponents[i];
    }
    rem_local.at(alpha).add_term(beta - alpha, c);
  }
  GleasonDecomposition out{taylor_local.shifted(minus_w), {}};
  for (auto& [alpha, phi] : rem_local) {
    out.remainders.emplace(alpha, phi.shifted(minus_w));
  }
  return out;
}

}  // namespace drury
