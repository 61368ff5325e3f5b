#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drury/linalg.hpp"

namespace drury {

/// Exponent vector alpha in N^d.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);

  static MultiIndex zero(int d);
  /// e_k, with k zero-based.
  static MultiIndex unit(int d, int k);

  int variables() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  /// alpha_1! ... alpha_d!
  double factorial() const;
  /// |alpha|! / alpha!, the number of words abelianizing to alpha.
  double multinomial() const;

  bool divides(const MultiIndex& other) const;
  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires divides(other) on the right operand.
  MultiIndex operator-(const MultiIndex& other) const;

  bool operator==(const MultiIndex&) const = default;

  /// "x1^2*x2", or "1" for the zero index.
  std::string to_string() const;
};

/// Graded order: total degree first, then x1 > x2 > ... lexicographically,
/// so in two variables 1, x1, x2, x1^2, x1x2, x2^2, ...
struct GradedOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

std::vector<MultiIndex> monomials_of_degree(int d, int degree);
/// All alpha with |alpha| <= max_degree, in graded order.
std::vector<MultiIndex> monomials_up_to(int d, int max_degree);
/// Number of monomials of degree <= max_degree in d variables.
Index count_monomials_up_to(int d, int max_degree);

/// Word over the letters 1..d; the empty word is the vacuum.
struct Word {
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  MultiIndex abelianize(int d) const;
  bool operator==(const Word&) const = default;
};

/// Polynomial in d commuting variables with complex coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Complex, GradedOrder>;

  explicit Polynomial(int d = 1);

  static Polynomial constant(int d, Complex c);
  /// x_k with k zero-based.
  static Polynomial variable(int d, int k);
  static Polynomial monomial(const MultiIndex& alpha, Complex c = 1.0);

  int variables() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Complex coefficient(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, Complex c);

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial scaled(Complex c) const;

  Complex evaluate(std::span<const Complex> z) const;
  /// p(x + w), expanded in the monomial basis.
  Polynomial shifted(std::span<const Complex> w) const;
  /// Drops every term of degree > max_degree.
  Polynomial truncated(int max_degree) const;
  /// Drops coefficients with modulus <= rel * max modulus.
  Polynomial chopped(double rel = 1e-12) const;

  /// Text form `c*x1^a1*...*xd^ad + ...`; complex coefficients with both
  /// parts nonzero are parenthesized as `(a+bi)`.
  std::string to_string() const;

  /// Parses the text form. Factors may be separated by `*` or whitespace.
  /// When d == 0 the variable count is the largest index that appears
  /// (at least 1). Throws std::invalid_argument naming the offending offset.
  static Polynomial parse(std::string_view text, int d = 0);

 private:
  void check_same_variables(const Polynomial& q) const;

  int d_;
  Terms terms_;
};

/// max_alpha |p_alpha - q_alpha|.
double coefficient_distance(const Polynomial& p, const Polynomial& q);

/// Shortest round-trip decimal representation.
std::string format_double(double x);
std::string format_complex(Complex c);

}  // namespace drury
