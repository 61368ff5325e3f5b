#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drury/ideals.hpp"
#include "drury/tuples.hpp"

namespace drury {

/// The 3x3 pair with entries +-1/sqrt(3) that has no separating vector.
RowTuple maxcount();

/// Dimension 2N+1 on xi_1..xi_N, eta_1..eta_{N+1}, with
/// T_1 xi_n = eta_{n+1}/sqrt(2) and T_2 xi_n = eta_n/sqrt(2).
RowTuple fromgriff(int n);

/// Model tuple of (x_1^{n_1}, ..., x_d^{n_d}).
RowTuple rectangle(const std::vector<int>& sides);
AnnihilatorBasis rectangle_ideal(const std::vector<int>& sides);

/// Model tuple of (x^m) in one variable, the m x m nilpotent Jordan cell.
RowTuple jordan(int m);

/// Ideal generated by `generators`, presented at the least degree m <= 10 for
/// which it provably contains every monomial of degree m. Throws
/// std::invalid_argument when no such m is found.
AnnihilatorBasis ideal_from_generators(const std::vector<Polynomial>& generators);
RowTuple model_fixture(const std::vector<Polynomial>& generators);

struct FixtureInfo {
  std::string name;
  std::string parameters;
  std::string description;
};

std::vector<FixtureInfo> list_fixtures();

/// Builds a fixture from `name(args)` or `name:args`, e.g. `fromgriff(3)`,
/// `rectangle:2,3`, `model(x1^2, x2)`.
RowTuple build_fixture(std::string_view spec);

}  // namespace drury
