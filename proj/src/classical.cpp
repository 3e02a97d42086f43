#include "factorlab/classical.hpp"

#include "factorlab/arith.hpp"
#include "factorlab/errors.hpp"

#include <climits>

namespace factorlab {

namespace {

constexpr unsigned kDeadlineStride = 1024;

}  // namespace

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

FactorResult trial_division(const mpz_class& n, std::optional<mpz_class> bound, const Deadline& deadline) {
  static const std::string kMethod = "trial";
  Stopwatch watch;
  if (n < 4) throw UnsupportedInput("trial_division: n must be >= 4, got " + n.get_str());
  if (is_probable_prime(n)) return watch.stamp(FactorResult::failure(n, kMethod, "prime input"));

  mpz_class limit = bound ? std::min(*bound, isqrt(n)) : isqrt(n);
  if (limit < 2) return watch.stamp(FactorResult::failure(n, kMethod, "bound below 2"));
  const unsigned long last = limit.fits_ulong_p() ? limit.get_ui() : ULONG_MAX - 6;

  auto divides = [&](unsigned long d) { return mpz_divisible_ui_p(n.get_mpz_t(), d) != 0; };
  if (divides(2)) return watch.stamp(FactorResult::success(n, 2, kMethod));
  if (last >= 3 && divides(3)) return watch.stamp(FactorResult::success(n, 3, kMethod));

  // 6k - 1, 6k + 1 wheel
  unsigned iter = 0;
  for (unsigned long d = 5; d <= last; d += 6) {
    if (divides(d)) return watch.stamp(FactorResult::success(n, d, kMethod));
    if (d + 2 <= last && divides(d + 2)) return watch.stamp(FactorResult::success(n, d + 2, kMethod));
    if (++iter % kDeadlineStride == 0 && deadline.expired()) {
      return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    }
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "no factor below bound"));
}

FactorResult fermat_factor(const mpz_class& n, std::uint64_t max_steps, const Deadline& deadline) {
  static const std::string kMethod = "fermat";
  Stopwatch watch;
  if (n < 4 || mpz_even_p(n.get_mpz_t())) {
    throw UnsupportedInput("fermat_factor: n must be odd and >= 4, got " + n.get_str());
  }
  if (is_probable_prime(n)) return watch.stamp(FactorResult::failure(n, kMethod, "prime input"));

  mpz_class a = isqrt(n);
  if (a * a < n) ++a;
  mpz_class r = a * a - n;  // maintained as a^2 - n
  for (std::uint64_t step = 0; step <= max_steps; ++step) {
    if (auto b = perfect_square_root(r)) {
      mpz_class lo = a - *b;
      if (lo > 1) return watch.stamp(FactorResult::success(n, lo, kMethod));
      // a - b == 1 is the trivial representation n = 1 * n, the last one Fermat can reach.
      return watch.stamp(FactorResult::failure(n, kMethod, "only the trivial representation exists"));
    }
    r += 2 * a + 1;
    ++a;
    if (step % kDeadlineStride == 0 && deadline.expired()) {
      return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    }
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "step budget exhausted"));
}

FactorResult pollard_rho(const mpz_class& n, const mpz_class& seed, std::uint64_t max_iters, const Deadline& deadline,
                         long increment) {
  static const std::string kMethod = "rho";
  Stopwatch watch;
  if (n < 4) throw UnsupportedInput("pollard_rho: n must be >= 4, got " + n.get_str());
  if (is_probable_prime(n)) return watch.stamp(FactorResult::failure(n, kMethod, "prime input"));
  if (mpz_even_p(n.get_mpz_t())) return watch.stamp(FactorResult::success(n, 2, kMethod));

  auto step = [&](mpz_class& v) {
    v = v * v + increment;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };

  mpz_class tortoise = seed;
  mpz_mod(tortoise.get_mpz_t(), tortoise.get_mpz_t(), n.get_mpz_t());
  mpz_class hare = tortoise;
  mpz_class diff, g;
  for (std::uint64_t i = 1; i <= max_iters; ++i) {
    step(tortoise);
    step(hare);
    step(hare);
    diff = tortoise - hare;
    mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    if (g != 1) {
      if (g == n) return watch.stamp(FactorResult::failure(n, kMethod, "cycle"));
      return watch.stamp(FactorResult::success(n, g, kMethod));
    }
    if (i % kDeadlineStride == 0 && deadline.expired()) {
      return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    }
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "iteration budget exhausted"));
}

FactorResult pollard_rho_restarting(const mpz_class& n, const mpz_class& seed, std::uint64_t max_iters,
                                    unsigned attempts, const Deadline& deadline) {
  Stopwatch watch;
  FactorResult last;
  for (unsigned k = 0; k < attempts; ++k) {
    last = pollard_rho(n, seed + k, max_iters, deadline);
    if (last.reason != "cycle") break;
  }
  return watch.stamp(std::move(last));
}

FactorResult pollard_p_minus_1(const mpz_class& n, unsigned long smoothness_bound, const Deadline& deadline) {
  static const std::string kMethod = "p-1";
  Stopwatch watch;
  if (n < 4 || mpz_even_p(n.get_mpz_t())) {
    throw UnsupportedInput("pollard_p_minus_1: n must be odd and >= 4, got " + n.get_str());
  }
  if (is_probable_prime(n)) return watch.stamp(FactorResult::failure(n, kMethod, "prime input"));

  mpz_class a = 2;
  mpz_class g, am1;
  auto gcd_with_n = [&](const mpz_class& v) {
    am1 = v - 1;
    mpz_gcd(g.get_mpz_t(), am1.get_mpz_t(), n.get_mpz_t());
    return g;
  };

  unsigned iter = 0;
  for (unsigned long q : primes_up_to(smoothness_bound)) {
    // largest power of q not exceeding the bound
    unsigned long qe = q;
    while (qe <= smoothness_bound / q) qe *= q;

    const mpz_class before = a;
    mpz_powm_ui(a.get_mpz_t(), a.get_mpz_t(), qe, n.get_mpz_t());
    gcd_with_n(a);
    if (g == 1) {
      if (++iter % 64 == 0 && deadline.expired()) {
        return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
      }
      continue;
    }
    if (g != n) return watch.stamp(FactorResult::success(n, g, kMethod));

    // Both group orders became covered by this prime power; retry one factor of q at a time.
    a = before;
    for (unsigned long pw = 1; pw < qe; pw *= q) {
      mpz_powm_ui(a.get_mpz_t(), a.get_mpz_t(), q, n.get_mpz_t());
      gcd_with_n(a);
      if (g == 1) continue;
      if (g != n) return watch.stamp(FactorResult::success(n, g, kMethod));
      break;
    }
    return watch.stamp(FactorResult::failure(n, kMethod, "bound too large"));
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "bound too small"));
}

}  // namespace factorlab
