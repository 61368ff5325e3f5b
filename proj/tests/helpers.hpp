#pragma once

#include <cmath>

#include "drury/linalg.hpp"

namespace testing_helpers {

inline drury::Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  drury::Matrix m(static_cast<drury::Index>(rows.size()),
                  static_cast<drury::Index>(rows.begin()->size()));
  drury::Index i = 0;
  for (const auto& r : rows) {
    drury::Index j = 0;
    for (double v : r) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

inline drury::Vector real_vector(std::initializer_list<double> xs) {
  drury::Vector v(static_cast<drury::Index>(xs.size()));
  drury::Index i = 0;
  for (double x : xs) {
    v(i++) = x;
  }
  return v;
}

inline double max_abs(const drury::Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace testing_helpers
