#include "drury/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace drury {

void Tolerance::check() const {
  if (!(rank_rel_tol > 0) || !(psd_tol > 0) || !(iter_tol > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("max_iter must be at least 1");
  }
}

bool all_finite(const Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) {
    return 0.0;
  }
  // Eigenvalues of the smaller Gram matrix; sigma_max^2 is recovered with
  // absolute error O(eps * sigma_max^2), i.e. relative accuracy O(eps).
  const Matrix gram = a.rows() <= a.cols() ? Matrix(a * a.adjoint())
                                           : Matrix(a.adjoint() * a);
  if (gram.rows() == 1) {
    return std::sqrt(std::max(0.0, gram(0, 0).real()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

Eigen::VectorXd singular_values(const Matrix& a) {
  if (a.size() == 0) {
    return Eigen::VectorXd();
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

RankKernel rank_and_kernel(const Matrix& a, const Tolerance& tol) {
  const Index n = a.cols();
  if (a.rows() == 0 || n == 0) {
    return {0, identity(n)};
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cut = tol.rank_rel_tol * s(0);
  Index rank = 0;
  if (s(0) > 0) {
    while (rank < s.size() && s(rank) > cut) {
      ++rank;
    }
  }
  return {rank, svd.matrixV().rightCols(n - rank)};
}

Index numerical_rank(const Matrix& a, const Tolerance& tol) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0 || s(0) == 0) {
    return 0;
  }
  return (s.array() > tol.rank_rel_tol * s(0)).count();
}

Matrix column_space(const Matrix& a, const Tolerance& tol) {
  if (a.size() == 0) {
    return Matrix(a.rows(), 0);
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  Index rank = 0;
  if (s(0) > 0) {
    while (rank < s.size() && s(rank) > tol.rank_rel_tol * s(0)) {
      ++rank;
    }
  }
  return svd.matrixU().leftCols(rank);
}

bool psd_below_identity(const Matrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("psd_below_identity: matrix is not square");
  }
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tol.psd_tol * scale) {
    throw std::invalid_argument("psd_below_identity: matrix is not Hermitian");
  }
  if (a.rows() == 0) {
    return true;
  }
  const Matrix herm = 0.5 * (a + a.adjoint());
  const Matrix gap = identity(a.rows()) - herm;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gap, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol.psd_tol;
}

Matrix orthonormalize(const Matrix& v, const Tolerance& tol) {
  const Index n = v.rows();
  double scale = 0;
  for (Index j = 0; j < v.cols(); ++j) {
    scale = std::max(scale, v.col(j).norm());
  }
  Matrix q(n, 0);
  if (scale == 0) {
    return q;
  }
  const double cut = tol.rank_rel_tol * scale;
  for (Index j = 0; j < v.cols(); ++j) {
    Vector r = v.col(j);
    for (int pass = 0; pass < 2 && q.cols() > 0; ++pass) {
      r -= q * (q.adjoint() * r);
    }
    const double nr = r.norm();
    if (nr > cut) {
      q.conservativeResize(n, q.cols() + 1);
      q.col(q.cols() - 1) = r / nr;
    }
  }
  return q;
}

Matrix rref(const Matrix& a, double rel_tol) {
  Matrix m = a;
  if (m.size() == 0) {
    return Matrix(0, a.cols());
  }
  const double cut = rel_tol * m.cwiseAbs().maxCoeff();
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    double best = 0;
    for (Index i = row; i < m.rows(); ++i) {
      if (std::abs(m(i, col)) > best) {
        best = std::abs(m(i, col));
        pivot = i;
      }
    }
    if (best <= cut) {
      m.block(row, col, m.rows() - row, 1).setZero();
      continue;
    }
    m.row(row).swap(m.row(pivot));
    m.row(row) /= m(row, col);
    m(row, col) = 1.0;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != row) {
        const Complex f = m(i, col);
        m.row(i) -= f * m.row(row);
        m(i, col) = 0.0;
      }
    }
    ++row;
  }
  return m.topRows(row);
}

double subspace_distance(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) {
    return 1.0;
  }
  if (a.cols() == 0) {
    return 0.0;
  }
  // ||(I - P_b) a|| = sin of the largest principal angle.
  const Matrix residual = a - b * (b.adjoint() * a);
  return std::min(1.0, operator_norm(residual));
}

bool is_negligible(const Matrix& x, double scale, const Tolerance& tol) {
  return x.norm() <= tol.rank_rel_tol * scale;
}

Matrix identity(Index n) { return Matrix::Identity(n, n); }

}  // namespace drury
