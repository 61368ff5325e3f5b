#include "drury/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace drury {

RowTuple maxcount() {
  const double s = 1.0 / std::sqrt(3.0);
  Matrix t1 = Matrix::Zero(3, 3);
  Matrix t2 = Matrix::Zero(3, 3);
  t1(1, 0) = s;
  t1(1, 2) = -s;
  t2(1, 2) = s;
  return RowTuple({t1, t2});
}

RowTuple fromgriff(int n) {
  if (n < 1) {
    throw std::invalid_argument("fromgriff needs N >= 1");
  }
  const Index dim = 2 * n + 1;
  const double s = 1.0 / std::sqrt(2.0);
  Matrix t1 = Matrix::Zero(dim, dim);
  Matrix t2 = Matrix::Zero(dim, dim);
  // xi_k sits at k - 1, eta_k at n + k - 1.
  for (int k = 1; k <= n; ++k) {
    t1(n + k, k - 1) = s;
    t2(n + k - 1, k - 1) = s;
  }
  return RowTuple({t1, t2});
}

AnnihilatorBasis rectangle_ideal(const std::vector<int>& sides) {
  if (sides.empty()) {
    throw std::invalid_argument("rectangle needs at least one side");
  }
  const int d = static_cast<int>(sides.size());
  std::vector<Polynomial> gens;
  int m = 1;
  for (int k = 0; k < d; ++k) {
    if (sides[k] < 1) {
      throw std::invalid_argument("rectangle sides must be positive");
    }
    MultiIndex a = MultiIndex::zero(d);
    a.exponents[k] = sides[k];
    gens.push_back(Polynomial::monomial(a));
    m += sides[k] - 1;
  }
  return AnnihilatorBasis::from_generators(d, m, gens);
}

RowTuple rectangle(const std::vector<int>& sides) {
  return model_of(rectangle_ideal(sides));
}

RowTuple jordan(int m) {
  if (m < 1) {
    throw std::invalid_argument("jordan needs m >= 1");
  }
  return model_of(AnnihilatorBasis::from_generators(1, m, {}));
}

AnnihilatorBasis ideal_from_generators(
    const std::vector<Polynomial>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("an ideal needs at least one generator");
  }
  int d = 1;
  int top = 0;
  for (const auto& g : generators) {
    d = std::max(d, g.variables());
    top = std::max(top, g.degree());
  }
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    // Re-embed in the common number of variables.
    Polynomial h(d);
    for (const auto& [alpha, c] : g.terms()) {
      MultiIndex a = MultiIndex::zero(d);
      std::copy(alpha.exponents.begin(), alpha.exponents.end(),
                a.exponents.begin());
      h.add_term(a, c);
    }
    if (h.coefficient(MultiIndex::zero(d)) != Complex(0)) {
      throw std::invalid_argument(
          "generators must vanish at the origin for a nilpotent model");
    }
    if (!h.is_zero()) {
      gens.push_back(std::move(h));
    }
  }
  for (int m = 1; m <= 10; ++m) {
    // Exact products g x^beta, so membership found here is certain.
    const int big = m + 2 * top;
    const auto monomials = monomials_up_to(d, big);
    std::map<MultiIndex, Index, GradedOrder> index;
    for (Index i = 0; i < static_cast<Index>(monomials.size()); ++i) {
      index.emplace(monomials[i], i);
    }
    std::vector<Vector> cols;
    for (const auto& g : gens) {
      for (const auto& beta : monomials_up_to(d, m + top)) {
        const Polynomial prod = g * Polynomial::monomial(beta);
        if (prod.degree() > big) {
          continue;
        }
        Vector v = Vector::Zero(static_cast<Index>(monomials.size()));
        for (const auto& [alpha, c] : prod.terms()) {
          v(index.at(alpha)) = c;
        }
        cols.push_back(std::move(v));
      }
    }
    if (cols.empty()) {
      continue;
    }
    Matrix span(static_cast<Index>(monomials.size()),
                static_cast<Index>(cols.size()));
    for (Index j = 0; j < span.cols(); ++j) {
      span.col(j) = cols[j];
    }
    const Matrix q = column_space(span);
    bool all = true;
    for (const auto& alpha : monomials_of_degree(d, m)) {
      const Vector e = Vector::Unit(span.rows(), index.at(alpha));
      if ((e - q * (q.adjoint() * e)).norm() > 1e-8) {
        all = false;
        break;
      }
    }
    if (all) {
      return AnnihilatorBasis::from_generators(d, m, gens);
    }
  }
  throw std::invalid_argument(
      "the ideal must contain every monomial of some degree <= 10");
}

RowTuple model_fixture(const std::vector<Polynomial>& generators) {
  return model_of(ideal_from_generators(generators));
}

std::vector<FixtureInfo> list_fixtures() {
  return {
      {"maxcount", "", "3x3 pair without separating or cyclic vectors"},
      {"fromgriff", "N", "2N+1 dimensional pair annihilated by all quadrics"},
      {"rectangle", "n1,...,nd", "model tuple of (x1^n1, ..., xd^nd)"},
      {"jordan", "m", "m x m nilpotent Jordan cell"},
      {"model", "p1,...,pk", "model tuple of the ideal generated by p1..pk"},
  };
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  if (trim(s).empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& fixture) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument("fixture " + fixture +
                                ": expected an integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

RowTuple build_fixture(std::string_view spec) {
  std::string name;
  std::string_view args;
  const auto paren = spec.find('(');
  const auto colon = spec.find(':');
  if (paren != std::string_view::npos) {
    if (spec.back() != ')') {
      throw std::invalid_argument("fixture: missing ')' in '" +
                                  std::string(spec) + "'");
    }
    name = trim(spec.substr(0, paren));
    args = spec.substr(paren + 1, spec.size() - paren - 2);
  } else if (colon != std::string_view::npos) {
    name = trim(spec.substr(0, colon));
    args = spec.substr(colon + 1);
  } else {
    name = trim(spec);
  }
  const auto parts = split_args(args);
  auto ints = [&]() {
    std::vector<int> v;
    for (const auto& p : parts) {
      v.push_back(parse_int(p, name));
    }
    return v;
  };
  auto one_int = [&]() {
    const auto v = ints();
    if (v.size() != 1) {
      throw std::invalid_argument("fixture " + name +
                                  " takes exactly one integer parameter");
    }
    return v[0];
  };
  if (name == "maxcount") {
    if (!parts.empty()) {
      throw std::invalid_argument("fixture maxcount takes no parameters");
    }
    return maxcount();
  }
  if (name == "fromgriff") {
    return fromgriff(one_int());
  }
  if (name == "jordan") {
    return jordan(one_int());
  }
  if (name == "rectangle") {
    return rectangle(ints());
  }
  if (name == "model") {
    std::vector<Polynomial> gens;
    for (const auto& p : parts) {
      gens.push_back(Polynomial::parse(p));
    }
    return model_fixture(gens);
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace drury
