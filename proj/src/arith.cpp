#include "factorlab/arith.hpp"

#include "factorlab/errors.hpp"

#include <array>
#include <cstdint>

namespace factorlab {

mpz_class isqrt(const mpz_class& n) {
  if (sgn(n) < 0) throw DomainError("isqrt: negative input " + n.get_str());
  if (n == 0) return 0;

  // Start above the root; Newton's iterates decrease monotonically to floor(sqrt(n)).
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  mpz_class x = 1;
  x <<= (bits + 1) / 2;
  for (;;) {
    mpz_class y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  // floor correction
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::optional<mpz_class> perfect_square_root(const mpz_class& n) {
  if (sgn(n) < 0) throw DomainError("is_perfect_square: negative input " + n.get_str());
  mpz_class r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

ExtGcd ext_gcd(const mpz_class& a, const mpz_class& b) {
  if (a == 0 && b == 0) throw DomainError("ext_gcd: both inputs are zero");
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

// n - 1 = d * 2^s with d odd; returns true when `a` does not witness compositeness.
bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned long s, const mpz_class& a) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const mpz_class& n, int rounds) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }

  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  // The first twelve primes are a deterministic witness set for n < 3.3 * 10^24.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned p : kSmallPrimes) {
      if (!miller_rabin_round(n, d, s, mpz_class(p))) return false;
    }
    return true;
  }

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x6b6f7264UL);
  const mpz_class span = n - 3;
  for (int i = 0; i < rounds; ++i) {
    mpz_class a = rng.get_z_range(span) + 2;  // [2, n-2]
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

SixKForm sixk_form(const mpz_class& p) {
  if (p == 2 || p == 3) {
    throw SmallPrimeInput("sixk_form: " + p.get_str() + " is a prime below 5 and has no 6x +/- 1 form");
  }
  if (p < 5) throw UnsupportedInput("sixk_form: input " + p.get_str() + " is below 5");
  const unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 6);
  if (r == 1) return SixKForm{(p - 1) / 6, +1};
  if (r == 5) return SixKForm{(p + 1) / 6, -1};
  throw UnsupportedInput("sixk_form: " + p.get_str() + " is divisible by 2 or 3");
}

mpz_class next_prime(const mpz_class& n) {
  if (n < 2) return 2;
  mpz_class c = n + 1;
  if (mpz_even_p(c.get_mpz_t()) && c != 2) ++c;
  while (!is_probable_prime(c)) c += 2;
  return c;
}

}  // namespace factorlab
