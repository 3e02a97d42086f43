#pragma once

// Baseline factoring methods: trial division, Fermat, Pollard rho, Pollard p-1
// and Lenstra's ECM on affine short Weierstrass curves.

#include "factorlab/factor_result.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace factorlab {

/// Smallest prime factor up to `bound` (default isqrt(n)).
FactorResult trial_division(const mpz_class& n, std::optional<mpz_class> bound = std::nullopt,
                            const Deadline& deadline = {});

/// Walks a = ceil(sqrt(n)), a+1, ... looking for a^2 - n = b^2. Requires odd n.
FactorResult fermat_factor(const mpz_class& n, std::uint64_t max_steps = 1'000'000, const Deadline& deadline = {});

/// Floyd cycle detection on x -> x^2 + increment (mod n) starting at `seed`.
/// A cycle that closes with gcd == n reports failed with reason "cycle"; callers reseed.
FactorResult pollard_rho(const mpz_class& n, const mpz_class& seed, std::uint64_t max_iters,
                         const Deadline& deadline = {}, long increment = 1);

/// Re-runs pollard_rho with seeds seed, seed+1, ... while it reports a cycle.
FactorResult pollard_rho_restarting(const mpz_class& n, const mpz_class& seed, std::uint64_t max_iters,
                                    unsigned attempts, const Deadline& deadline = {});

/// Base-2 p-1 with the exponent built one prime power at a time, so a factor is
/// caught before the exponent also covers the cofactor's group order.
FactorResult pollard_p_minus_1(const mpz_class& n, unsigned long smoothness_bound, const Deadline& deadline = {});

struct AffinePoint {
  mpz_class x;
  mpz_class y;
  bool infinity = false;

  static AffinePoint at_infinity() { return AffinePoint{0, 0, true}; }
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Thrown when a slope denominator has no inverse mod n. `divisor` = gcd(denominator, n).
class InversionFailure : public std::runtime_error {
 public:
  InversionFailure(mpz_class divisor, mpz_class element);
  const mpz_class& divisor() const { return divisor_; }
  const mpz_class& element() const { return element_; }

 private:
  mpz_class divisor_;
  mpz_class element_;
};

/// Thrown by AffineCurve when gcd(4a^3 + 27b^2, n) != 1. `divisor` is that gcd.
class SingularCurve : public std::invalid_argument {
 public:
  explicit SingularCurve(mpz_class divisor);
  const mpz_class& divisor() const { return divisor_; }

 private:
  mpz_class divisor_;
};

/// y^2 = x^3 + a x + b over Z/nZ, used formally when n is composite.
class AffineCurve {
 public:
  AffineCurve(mpz_class a, mpz_class b, mpz_class n);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& modulus() const { return n_; }

  bool contains(const AffinePoint& p) const;
  AffinePoint negate(const AffinePoint& p) const;
  AffinePoint add(const AffinePoint& p, const AffinePoint& q) const;
  AffinePoint dbl(const AffinePoint& p) const;
  /// Left-to-right double-and-add; k >= 0.
  AffinePoint multiply(const mpz_class& k, const AffinePoint& p) const;

 private:
  mpz_class reduce(const mpz_class& v) const;
  mpz_class inverse(const mpz_class& v) const;

  mpz_class a_;
  mpz_class b_;
  mpz_class n_;
};

/// Multiplies `start` by every prime power <= stage1_bound. Returns the gcd
/// witness of the first failed inversion (may equal n), or nullopt if none failed.
std::optional<mpz_class> ecm_stage1(const AffineCurve& curve, const AffinePoint& start, unsigned long stage1_bound);

struct EcmOptions {
  unsigned curve_count = 300;
  unsigned long stage1_bound = 2000;
  std::uint64_t rng_seed = 1;
};

/// Requires gcd(n, 6) == 1 (throws UnsupportedInput otherwise).
FactorResult ecm_factor(const mpz_class& n, const EcmOptions& options = {}, const Deadline& deadline = {});

/// Primes up to and including `limit`.
std::vector<unsigned long> primes_up_to(unsigned long limit);

}  // namespace factorlab
