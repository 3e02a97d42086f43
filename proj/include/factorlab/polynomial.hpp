#pragma once

// Sparse multivariate polynomials over Q in the eight variables
// x1, x2, x3, x4, y1, y2, y3, y4 under lex order x1 > x2 > ... > y4.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace factorlab {

inline constexpr std::size_t kNumVars = 8;

enum Var : std::size_t { x1, x2, x3, x4, y1, y2, y3, y4 };

using VariableNames = std::array<std::string_view, kNumVars>;

inline constexpr VariableNames kDecompositionNames = {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::array<std::uint32_t, kNumVars>& exponents) : exp_(exponents) {}
  static Monomial variable(std::size_t v, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t v) const { return exp_[v]; }
  std::uint32_t degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Exponent vectors compared left to right is exactly lex with x1 > x2 > ... > y4.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string(const VariableNames& names = kDecompositionNames) const;

 private:
  std::array<std::uint32_t, kNumVars> exp_{};
};

class Polynomial {
 public:
  // Greatest monomial first, so begin() is the leading term.
  using TermMap = std::map<Monomial, mpq_class, std::greater<>>;

  Polynomial() = default;
  Polynomial(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& constant) : Polynomial(mpq_class(constant)) {}  // NOLINT
  Polynomial(long constant) : Polynomial(mpq_class(constant)) {}  // NOLINT
  static Polynomial variable(std::size_t v);
  static Polynomial term(const mpq_class& coefficient, const Monomial& monomial);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Leading monomial/coefficient; throw DomainError on the zero polynomial.
  const Monomial& leading_monomial() const;
  const mpq_class& leading_coefficient() const;
  std::uint32_t total_degree() const;

  Polynomial monic() const;
  mpq_class evaluate(std::span<const mpq_class, kNumVars> point) const;

  /// this -= coefficient * monomial * g, in place.
  void subtract_multiple(const mpq_class& coefficient, const Monomial& monomial, const Polynomial& g);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpq_class& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= mpq_class(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpq_class& s) { return a *= s; }
  friend Polynomial operator*(const mpq_class& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned e) const;

  /// Canonical text: terms in decreasing lex order, coefficients as num or num/den.
  std::string to_string(const VariableNames& names = kDecompositionNames) const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);

  TermMap terms_;
};

/// Parses sums/products/powers of variables, integer or num/den literals and
/// named integer constants, with parentheses: "(x1*x4 - x2*x3)*(y1*y4 - y2*y3) - n".
/// Throws std::invalid_argument on malformed input or unknown identifiers.
Polynomial parse_polynomial(std::string_view text, const std::map<std::string, mpz_class, std::less<>>& constants = {},
                            const VariableNames& names = kDecompositionNames);

}  // namespace factorlab
