#include "factorlab/arith.hpp"
#include "factorlab/classical.hpp"
#include "factorlab/errors.hpp"

#include <doctest.h>

#include "fixtures.hpp"

#include <map>
#include <set>

using namespace factorlab;
using fixtures::Z;

namespace {

void check_split(const FactorResult& r, const mpz_class& n, const mpz_class& p, const mpz_class& q) {
  REQUIRE_MESSAGE(r.ok(), r.method, ": ", r.reason);
  CHECK(r.n == n);
  CHECK(r.p == p);
  CHECK(r.q == q);
}

bool splits(const FactorResult& r, const mpz_class& n) { return r.ok() && r.p * r.q == n && r.p > 1 && r.p <= r.q; }

}  // namespace

TEST_CASE("FactorResult orders and validates") {
  const auto r = FactorResult::success(35, 7, "x");
  CHECK(r.p == 5);
  CHECK(r.q == 7);
  CHECK_THROWS_AS(FactorResult::success(35, 1, "x"), std::logic_error);
  CHECK_THROWS_AS(FactorResult::success(35, 35, "x"), std::logic_error);
  CHECK_THROWS_AS(FactorResult::success(35, 6, "x"), std::logic_error);
  CHECK(to_string(Status::timeout) == "timeout");
}

TEST_CASE("trial division") {
  check_split(trial_division(35), 35, 5, 7);
  check_split(trial_division(25651), 25651, 113, 227);
  const auto prime = trial_division(17);
  CHECK(prime.status == Status::failed);
  CHECK(prime.reason == "prime input");
  CHECK_FALSE(trial_division(25651, mpz_class(100)).ok());
  check_split(trial_division(4), 4, 2, 2);
}

TEST_CASE("fermat") {
  check_split(fermat_factor(5959), 5959, 59, 101);
  check_split(fermat_factor(9), 9, 3, 3);
  check_split(fermat_factor(15), 15, 3, 5);
  CHECK_THROWS_AS(fermat_factor(10), UnsupportedInput);
  // 3 * 1000003 needs about 10^5 steps
  CHECK_FALSE(fermat_factor(3 * 1000003, 10).ok());
  CHECK(fermat_factor(3 * 1000003, 1'000'000).ok());
}

TEST_CASE("pollard rho") {
  const auto r = pollard_rho(8051, 2, 100'000);
  REQUIRE(r.ok());
  CHECK((r.p == 83 && r.q == 97));
  const auto s = pollard_rho_restarting(25651, 2, 100'000, 8);
  REQUIRE(s.ok());
  CHECK(s.p == 113);
  const auto t = pollard_rho_restarting(15, 2, 1'000, 8);
  REQUIRE(t.ok());
  CHECK(t.p == 3);
}

TEST_CASE("pollard rho reports closed cycles and restarting recovers") {
  CHECK(pollard_rho(101, 2, 1000).reason == "prime input");
  int cycles = 0;
  for (long n = 15; n < 5000; n += 2) {
    if (is_probable_prime(n) || is_perfect_square(n)) continue;
    const auto r = pollard_rho(n, 2, 100'000);
    if (r.ok()) continue;
    CAPTURE(n);
    CHECK(r.reason == "cycle");
    ++cycles;
    const auto again = pollard_rho_restarting(n, 2, 100'000, 16);
    REQUIRE(again.ok());
    CHECK(again.p * again.q == n);
  }
  CHECK(cycles > 0);
}

TEST_CASE("pollard p-1") {
  check_split(pollard_p_minus_1(299, 12), 299, 13, 23);
  check_split(pollard_p_minus_1(25651, 120), 25651, 113, 227);
  const auto prime = pollard_p_minus_1(17, 100);
  CHECK_FALSE(prime.ok());
  CHECK(prime.reason == "prime input");
  const auto small = pollard_p_minus_1(1009 * 1013, 5);
  CHECK_FALSE(small.ok());
  CHECK(small.reason == "bound too small");
  CHECK_THROWS_AS(pollard_p_minus_1(100, 10), UnsupportedInput);
}

TEST_CASE("affine curve group law matches a brute-force table mod 97") {
  const AffineCurve curve(2, 3, 97);
  std::vector<AffinePoint> points{AffinePoint::at_infinity()};
  for (int x = 0; x < 97; ++x) {
    for (int y = 0; y < 97; ++y) {
      if ((y * y - (x * x * x + 2 * x + 3)) % 97 == 0) points.push_back({x, y, false});
    }
  }
  for (const auto& p : points) CHECK(curve.contains(p));

  auto inv = [](long v) {
    v = ((v % 97) + 97) % 97;
    for (long i = 1; i < 97; ++i) {
      if (v * i % 97 == 1) return i;
    }
    return 0L;
  };
  auto oracle = [&](const AffinePoint& p, const AffinePoint& q) -> AffinePoint {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const long x1 = p.x.get_si(), y1 = p.y.get_si(), x2 = q.x.get_si(), y2 = q.y.get_si();
    long lambda;
    if (x1 == x2) {
      if ((y1 + y2) % 97 == 0) return AffinePoint::at_infinity();
      lambda = (3 * x1 * x1 + 2) * inv(2 * y1) % 97;
    } else {
      lambda = ((y2 - y1) % 97 + 97) * inv(x2 - x1) % 97;
    }
    const long x3 = ((lambda * lambda - x1 - x2) % 97 + 97) % 97;
    const long y3 = ((lambda * (x1 - x3) - y1) % 97 + 97) % 97;
    return {x3, y3, false};
  };

  const mpz_class order = static_cast<long>(points.size());
  for (const auto& p : points) {
    for (const auto& q : points) {
      const auto sum = curve.add(p, q);
      CHECK(sum == oracle(p, q));
      CHECK(sum == curve.add(q, p));
    }
    CHECK(curve.add(p, curve.negate(p)).infinity);
    CHECK(curve.dbl(p) == curve.add(p, p));
    CHECK(curve.multiply(order, p).infinity);
    CHECK(curve.multiply(3, p) == curve.add(p, curve.dbl(p)));
    CHECK(curve.multiply(0, p).infinity);
  }
}

TEST_CASE("affine curve rejects singular curves") {
  // 4a^3 + 27b^2 = 0 for a = -3, b = 2
  CHECK_THROWS_AS(AffineCurve(-3, 2, 101), SingularCurve);
  try {
    AffineCurve(-3, 2, 101);
  } catch (const SingularCurve& e) {
    CHECK(e.divisor() == 101);
  }
}

TEST_CASE("ecm stage 1 extracts 599 from 455839") {
  const AffineCurve curve(5, -5, 455839);
  const AffinePoint start{1, 1, false};
  REQUIRE(curve.contains(start));
  // (1, 1) has order 640 = 2^7 * 5 mod 599, so 840 P is still finite there;
  // 599 surfaces from B1 = 20 on
  CHECK_FALSE(ecm_stage1(curve, start, 8));
  CHECK_FALSE(ecm_stage1(curve, start, 16));
  CHECK(ecm_stage1(curve, start, 20) == mpz_class(599));
  const auto g = ecm_stage1(curve, start, 128);
  REQUIRE(g);
  CHECK(*g == 599);
  CHECK(455839 % *g == 0);
}

TEST_CASE("ecm inversion failure carries the divisor") {
  const AffineCurve curve(5, -5, 455839);
  try {
    curve.multiply(mpz_class(40320), AffinePoint{1, 1, false});
    FAIL("expected an inversion failure");
  } catch (const InversionFailure& e) {
    // 8! P
    CHECK(e.divisor() == 599);
  }
}

TEST_CASE("ecm_factor") {
  const auto r = ecm_factor(25651);
  REQUIRE(r.ok());
  CHECK(r.p == 113);
  CHECK_THROWS_AS(ecm_factor(25650), UnsupportedInput);
  CHECK_THROWS_AS(ecm_factor(3 * 25651), UnsupportedInput);
  const auto again = ecm_factor(455839, EcmOptions{300, 2000, 9});
  REQUIRE(again.ok());
  CHECK(again.p == 599);
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<unsigned long>{2});
  CHECK(primes_up_to(30) == std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1'000'000).size() == 78498);
}

TEST_CASE("every method yields exact splits on a random semiprime corpus") {
  const auto corpus = fixtures::semiprime_corpus(30, 20, 2024);
  for (const auto& s : corpus) {
    CAPTURE(s.n);
    CHECK(splits(trial_division(s.n), s.n));
    CHECK(splits(fermat_factor(s.n, 10'000'000), s.n));
    CHECK(splits(pollard_rho_restarting(s.n, 2, 10'000'000, 8), s.n));
    CHECK(splits(ecm_factor(s.n, EcmOptions{2000, 2000, 5}), s.n));
    const auto pm1 = pollard_p_minus_1(s.n, 100'000);
    if (pm1.ok()) CHECK(splits(pm1, s.n));
    for (const auto& r : {trial_division(s.n), pollard_rho_restarting(s.n, 3, 10'000'000, 8)}) {
      CHECK(r.p == s.p);
      CHECK(r.q == s.q);
    }
  }
}

TEST_CASE("deadlines stop long runs") {
  const mpz_class n = fixtures::sixk_cases()[0].p * fixtures::sixk_cases()[1].p;
  const auto r = trial_division(n, std::nullopt, Deadline::after(std::chrono::milliseconds(20)));
  CHECK(r.status == Status::timeout);
  const auto f = fermat_factor(n, 1'000'000'000, Deadline::after(std::chrono::milliseconds(20)));
  CHECK(f.status == Status::timeout);
}
