#include "drury/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drury {

MultiIndex::MultiIndex(std::vector<int> e) : exponents(std::move(e)) {
  for (int v : exponents) {
    if (v < 0) {
      throw std::invalid_argument("multi-index exponents must be nonnegative");
    }
  }
}

MultiIndex MultiIndex::zero(int d) { return MultiIndex(std::vector<int>(d, 0)); }

MultiIndex MultiIndex::unit(int d, int k) {
  MultiIndex a = zero(d);
  a.exponents.at(k) = 1;
  return a;
}

int MultiIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

double MultiIndex::factorial() const {
  double f = 1;
  for (int v : exponents) {
    for (int i = 2; i <= v; ++i) {
      f *= i;
    }
  }
  return f;
}

double MultiIndex::multinomial() const {
  // Product of binomials keeps every intermediate an exact integer.
  double result = 1;
  int total = 0;
  for (int v : exponents) {
    for (int i = 1; i <= v; ++i) {
      ++total;
      result = result * total / i;
    }
  }
  return result;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (other.exponents.size() != exponents.size()) {
    return false;
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) {
      return false;
    }
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.exponents.size() != exponents.size()) {
    throw std::invalid_argument("multi-index length mismatch");
  }
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    r.exponents[i] += other.exponents[i];
  }
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!other.divides(*this)) {
    throw std::invalid_argument("multi-index difference would be negative");
  }
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    r.exponents[i] -= other.exponents[i];
  }
  return r;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += 'x' + std::to_string(i + 1);
    if (exponents[i] > 1) {
      out += '^' + std::to_string(exponents[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool GradedOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) {
    return da < db;
  }
  return a.exponents > b.exponents;
}

namespace {

void fill_degree(int d, int remaining, std::vector<int>& prefix,
                 std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == d - 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    prefix.push_back(e);
    fill_degree(d, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int d, int degree) {
  if (d < 1) {
    throw std::invalid_argument("number of variables must be positive");
  }
  std::vector<MultiIndex> out;
  if (degree < 0) {
    return out;
  }
  std::vector<int> prefix;
  fill_degree(d, degree, prefix, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(int d, int max_degree) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= max_degree; ++k) {
    auto level = monomials_of_degree(d, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Index count_monomials_up_to(int d, int max_degree) {
  if (max_degree < 0) {
    return 0;
  }
  // binomial(max_degree + d, d)
  double c = 1;
  for (int i = 1; i <= d; ++i) {
    c = c * (max_degree + i) / i;
  }
  return static_cast<Index>(std::llround(c));
}

MultiIndex Word::abelianize(int d) const {
  MultiIndex a = MultiIndex::zero(d);
  for (int letter : letters) {
    if (letter < 1 || letter > d) {
      throw std::invalid_argument("word letter out of range");
    }
    ++a.exponents[letter - 1];
  }
  return a;
}

Polynomial::Polynomial(int d) : d_(d) {
  if (d < 1) {
    throw std::invalid_argument("number of variables must be positive");
  }
}

Polynomial Polynomial::constant(int d, Complex c) {
  Polynomial p(d);
  p.add_term(MultiIndex::zero(d), c);
  return p;
}

Polynomial Polynomial::variable(int d, int k) {
  Polynomial p(d);
  p.add_term(MultiIndex::unit(d, k), 1.0);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, Complex c) {
  Polynomial p(alpha.variables());
  p.add_term(alpha, c);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() ||
         terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Complex Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Complex(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, Complex c) {
  if (alpha.variables() != d_) {
    throw std::invalid_argument("monomial has wrong number of variables");
  }
  if (c == Complex(0)) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0)) {
      terms_.erase(it);
    }
  }
}

void Polynomial::check_same_variables(const Polynomial& q) const {
  if (q.d_ != d_) {
    throw std::invalid_argument("polynomials have different variable counts");
  }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  check_same_variables(q);
  Polynomial r = *this;
  for (const auto& [a, c] : q.terms_) {
    r.add_term(a, c);
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  return *this + q.scaled(-1.0);
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  check_same_variables(q);
  Polynomial r(d_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, e] : q.terms_) {
      r.add_term(a + b, c * e);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(Complex c) const {
  Polynomial r(d_);
  for (const auto& [a, v] : terms_) {
    r.add_term(a, c * v);
  }
  return r;
}

Complex Polynomial::evaluate(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != d_) {
    throw std::invalid_argument("evaluation point has wrong dimension");
  }
  Complex sum = 0;
  for (const auto& [a, c] : terms_) {
    Complex term = c;
    for (int i = 0; i < d_; ++i) {
      term *= std::pow(z[i], a.exponents[i]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::shifted(std::span<const Complex> w) const {
  if (static_cast<int>(w.size()) != d_) {
    throw std::invalid_argument("shift has wrong dimension");
  }
  Polynomial r(d_);
  for (const auto& [gamma, c] : terms_) {
    // prod_i (x_i + w_i)^gamma_i, one variable at a time.
    std::vector<std::pair<MultiIndex, Complex>> partial{{MultiIndex::zero(d_), c}};
    for (int i = 0; i < d_; ++i) {
      const int g = gamma.exponents[i];
      std::vector<std::pair<MultiIndex, Complex>> next;
      double binom = 1;
      for (int j = 0; j <= g; ++j) {
        const Complex factor = binom * std::pow(w[i], g - j);
        for (const auto& [b, v] : partial) {
          MultiIndex nb = b;
          nb.exponents[i] = j;
          next.emplace_back(nb, v * factor);
        }
        binom = binom * (g - j) / (j + 1);
      }
      partial = std::move(next);
    }
    for (const auto& [b, v] : partial) {
      r.add_term(b, v);
    }
  }
  return r;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r(d_);
  for (const auto& [a, c] : terms_) {
    if (a.degree() <= max_degree) {
      r.terms_.emplace(a, c);
    }
  }
  return r;
}

Polynomial Polynomial::chopped(double rel) const {
  double biggest = 0;
  for (const auto& [a, c] : terms_) {
    biggest = std::max(biggest, std::abs(c));
  }
  Polynomial r(d_);
  for (const auto& [a, c] : terms_) {
    if (std::abs(c) > rel * biggest) {
      r.terms_.emplace(a, c);
    }
  }
  return r;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex c) {
  if (c.imag() == 0) {
    return format_double(c.real());
  }
  if (c.real() == 0) {
    return format_double(c.imag()) + "i";
  }
  std::string im = format_double(c.imag());
  if (im.front() != '-') {
    im = "+" + im;
  }
  return "(" + format_double(c.real()) + im + "i)";
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    const bool is_const = a.degree() == 0;
    std::string coeff;
    bool negative = false;
    if (c.imag() == 0) {
      negative = c.real() < 0;
      const double mag = std::abs(c.real());
      if (mag != 1.0 || is_const) {
        coeff = format_double(mag);
      }
    } else if (c.real() == 0) {
      negative = c.imag() < 0;
      const double mag = std::abs(c.imag());
      coeff = (mag == 1.0 ? std::string() : format_double(mag)) + "i";
    } else {
      coeff = format_complex(c);
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (is_const) {
      out += coeff;
    } else if (coeff.empty()) {
      out += a.to_string();
    } else {
      out += coeff + "*" + a.to_string();
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int d) : s_(text), d_(d) {}

  Polynomial run() {
    std::vector<std::pair<std::vector<std::pair<int, int>>, Complex>> terms;
    int max_var = 0;
    skip_ws();
    if (at_end()) {
      fail("empty polynomial");
    }
    bool first = true;
    while (!at_end()) {
      double sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      auto [factors, coeff] = term();
      for (const auto& f : factors) {
        max_var = std::max(max_var, f.first);
      }
      terms.emplace_back(std::move(factors), sign * coeff);
      skip_ws();
    }
    const int d = d_ > 0 ? d_ : std::max(1, max_var);
    if (max_var > d) {
      throw std::invalid_argument("polynomial uses x" + std::to_string(max_var) +
                                  " but only " + std::to_string(d) +
                                  " variables are available");
    }
    Polynomial p(d);
    for (const auto& [factors, coeff] : terms) {
      MultiIndex a = MultiIndex::zero(d);
      for (const auto& [var, exp] : factors) {
        a.exponents[var - 1] += exp;
      }
      p.add_term(a, coeff);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(pos_) + ": " + msg);
  }

  double number() {
    double v = 0;
    auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (res.ec != std::errc()) {
      fail("expected a number");
    }
    pos_ = res.ptr - s_.data();
    return v;
  }

  int integer() {
    int v = 0;
    auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (res.ec != std::errc() || v < 0) {
      fail("expected a nonnegative integer");
    }
    pos_ = res.ptr - s_.data();
    return v;
  }

  bool starts_number() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  // real | real 'i' | 'i'
  Complex scalar() {
    if (peek() == 'i') {
      ++pos_;
      return {0, 1};
    }
    const double v = number();
    if (peek() == 'i') {
      ++pos_;
      return {0, v};
    }
    return {v, 0};
  }

  Complex parenthesized() {
    ++pos_;  // '('
    skip_ws();
    Complex total = 0;
    bool first = true;
    while (peek() != ')') {
      if (at_end()) {
        fail("unterminated '('");
      }
      double sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' inside coefficient");
      }
      first = false;
      if (!starts_number() && peek() != 'i') {
        fail("expected a number inside coefficient");
      }
      total += sign * scalar();
      skip_ws();
    }
    ++pos_;  // ')'
    return total;
  }

  std::pair<std::vector<std::pair<int, int>>, Complex> term() {
    Complex coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      coeff = parenthesized();
      have_coeff = true;
    } else if (starts_number() || peek() == 'i') {
      coeff = scalar();
      have_coeff = true;
    }
    std::vector<std::pair<int, int>> factors;
    for (;;) {
      const std::size_t save = pos_;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'x') {
          fail("expected a variable after '*'");
        }
      }
      if (peek() != 'x') {
        pos_ = save;
        break;
      }
      ++pos_;
      const int var = integer();
      if (var < 1) {
        fail("variables are numbered from 1");
      }
      int exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        exp = integer();
      }
      factors.emplace_back(var, exp);
    }
    if (!have_coeff && factors.empty()) {
      fail("expected a coefficient or a variable");
    }
    return {std::move(factors), coeff};
  }

  std::string_view s_;
  int d_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int d) {
  return PolyParser(text, d).run();
}

double coefficient_distance(const Polynomial& p, const Polynomial& q) {
  double worst = 0;
  const Polynomial diff = p - q;
  for (const auto& [a, c] : diff.terms()) {
    worst = std::max(worst, std::abs(c));
  }
  return worst;
}

}  // namespace drury
