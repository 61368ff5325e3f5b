#pragma once

#include "drury/linalg.hpp"

namespace drury {

/// A subspace of C^n held as an orthonormal column frame.
class Subspace {
 public:
  Subspace() = default;
  /// Orthonormalizes the columns of `span`; dependent columns are dropped.
  Subspace(Index ambient_dim, const Matrix& span, const Tolerance& tol = {});

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dimension() const { return frame_.cols(); }
  const Matrix& frame() const { return frame_; }
  bool is_zero() const { return dimension() == 0; }
  bool is_full() const { return dimension() == ambient_; }

  Matrix projector() const;
  Subspace complement() const;
  bool contains(const Vector& v, double rel_tol = 1e-8) const;

 private:
  Index ambient_ = 0;
  Matrix frame_;
};

/// Equal dimension and principal-angle distance below `threshold`.
bool same_subspace(const Subspace& a, const Subspace& b,
                   double threshold = 1e-8);

}  // namespace drury
