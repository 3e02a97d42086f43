#pragma once

// Dense integer polynomials in one and two variables, with the resultant
// and integer root search used by the small-root solver.

#include <gmpxx.h>

#include <vector>

namespace factorlab {

/// Coefficient i multiplies x^i. Trailing zeros are allowed on input and
/// stripped on output.
using UPoly = std::vector<mpz_class>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for the zero polynomial
mpz_class evaluate(const UPoly& p, const mpz_class& x);

/// c[i][j] multiplies x^i y^j.
struct BiPoly {
  std::vector<std::vector<mpz_class>> c;

  int degree_x() const;
  int degree_y() const;
  bool is_zero() const { return degree_x() < 0; }
  mpz_class evaluate(const mpz_class& x, const mpz_class& y) const;
  /// The polynomial in y obtained by fixing x.
  UPoly at_x(const mpz_class& x) const;
};

/// Determinant of a square integer matrix (fraction-free elimination).
mpz_class determinant(std::vector<std::vector<mpz_class>> m);

/// Res_y(f, g) as a polynomial in x, by evaluation at x = 0, 1, ... and
/// interpolation. Uses the formal y-degrees, so the result matches the
/// Sylvester determinant over Z[x].
UPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// Sorted distinct integer roots of p in [lo, hi], isolated with Sturm
/// sequences. Throws DomainError on the zero polynomial.
std::vector<mpz_class> integer_roots(const UPoly& p, const mpz_class& lo, const mpz_class& hi);

}  // namespace factorlab
