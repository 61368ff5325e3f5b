#pragma once

#include <complex>

#include <Eigen/Dense>

namespace drury {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical tolerance policy shared by every module.
///
/// Rank decisions are relative to the largest singular value of the matrix at
/// hand, never absolute.
struct Tolerance {
  double rank_rel_tol = 1e-9;
  double psd_tol = 1e-9;
  double iter_tol = 1e-12;
  int max_iter = 10'000;

  /// Throws std::invalid_argument unless all tolerances are positive and
  /// max_iter >= 1.
  void check() const;
};

bool all_finite(const Matrix& a);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const Matrix& a);

struct RankKernel {
  Index rank = 0;
  Matrix kernel;  // orthonormal columns, cols() == a.cols() - rank
};

RankKernel rank_and_kernel(const Matrix& a, const Tolerance& tol = {});

Index numerical_rank(const Matrix& a, const Tolerance& tol = {});

/// Orthonormal basis of the numerical column space (left singular vectors).
Matrix column_space(const Matrix& a, const Tolerance& tol = {});

/// True iff I - A >= -psd_tol. A must be square and Hermitian within psd_tol;
/// std::invalid_argument otherwise.
bool psd_below_identity(const Matrix& a, const Tolerance& tol = {});

/// Modified Gram-Schmidt with one reorthogonalization pass. Columns whose
/// residual falls below rank_rel_tol times the largest input column norm are
/// dropped, so the output spans the numerically independent columns in order.
Matrix orthonormalize(const Matrix& v, const Tolerance& tol = {});

/// Reduced row echelon form of the rows of `a`; zero rows are removed.
/// Pivots smaller than rel_tol * max|a_ij| are treated as zero.
Matrix rref(const Matrix& a, double rel_tol = 1e-10);

/// Sine of the largest principal angle between the spans of two orthonormal
/// frames. Returns 1 when the dimensions differ.
double subspace_distance(const Matrix& a, const Matrix& b);

/// ||X||_F <= rank_rel_tol * scale.
bool is_negligible(const Matrix& x, double scale, const Tolerance& tol = {});

Matrix identity(Index n);

}  // namespace drury
