#pragma once

#include <gmpxx.h>

#include <optional>

namespace factorlab {

/// Floor square root by Newton iteration. Throws DomainError for n < 0.
mpz_class isqrt(const mpz_class& n);

/// Root r with r*r == n, or nullopt when n is not a perfect square.
std::optional<mpz_class> perfect_square_root(const mpz_class& n);
inline bool is_perfect_square(const mpz_class& n) { return perfect_square_root(n).has_value(); }

struct ExtGcd {
  mpz_class g;
  mpz_class u;
  mpz_class v;
};

/// g = gcd(a, b) > 0 with a*u + b*v = g. Throws DomainError when a == b == 0.
ExtGcd ext_gcd(const mpz_class& a, const mpz_class& b);

/// Miller-Rabin. Below 2^64 a fixed witness set makes the answer exact;
/// above, `rounds` pseudo-random witnesses from a fixed seed are used.
bool is_probable_prime(const mpz_class& n, int rounds = 25);

/// A prime p >= 5 written as 6x + sign.
struct SixKForm {
  mpz_class x;
  int sign = 1;  // +1 or -1

  mpz_class reconstruct() const { return 6 * x + sign; }
  friend bool operator==(const SixKForm&, const SixKForm&) = default;
};

/// Throws SmallPrimeInput for 2 and 3, UnsupportedInput when gcd(p, 6) != 1 or p < 5.
/// Primality of p is the caller's responsibility.
SixKForm sixk_form(const mpz_class& p);

/// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n);

}  // namespace factorlab
