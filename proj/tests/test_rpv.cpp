#include "factorlab/arith.hpp"
#include "factorlab/rpv.hpp"

#include <doctest.h>

#include "fixtures.hpp"

#include <random>

using namespace factorlab;
using fixtures::Z;

TEST_CASE("triangular examples") {
  for (const auto& c : fixtures::triangular_cases()) {
    CAPTURE(c.n);
    const auto split = triangular_split(c.n);
    REQUIRE(split);
    CHECK(split->factor == c.factor);
    CHECK(split->factor * split->cofactor == c.n);
    CHECK(split->root * split->root == 8 * c.n + 1);

    const auto r = triangular_factor(c.n);
    REQUIRE(r.ok());
    CHECK(r.p * r.q == c.n);
    CHECK((r.p == c.factor || r.q == c.factor));
    CHECK(abs(2 * split->cofactor - split->factor) == 1);
  }
  CHECK(triangular_split(15)->cofactor == 3);
  CHECK(triangular_split(25651)->cofactor == 113);
}

TEST_CASE("triangular roots of 8n + 1") {
  CHECK(triangular_split(25651)->root == 453);
  CHECK(triangular_split(Z("22008842474653"))->root * triangular_split(Z("22008842474653"))->root ==
        Z("176070739797225"));
}

TEST_CASE("triangular failures") {
  const auto r = triangular_factor(35);
  CHECK_FALSE(r.ok());
  CHECK(r.reason == "not triangular");
  // 10 = 4 * 5 / 2 but also 2 * 5
  CHECK(triangular_factor(10).ok());
  for (const long p : {5L, 7L, 13L, 101L, 1009L}) CHECK_FALSE(triangular_factor(p).ok());
}

TEST_CASE("triangular semiprimes below 10^6 by brute force") {
  const auto spf = fixtures::smallest_factor_table(1'000'000);
  std::size_t found = 0;
  for (std::uint64_t k = 1; k * (k + 1) / 2 <= 1'000'000; ++k) {
    const std::uint64_t n = k * (k + 1) / 2;
    if (n < 4) continue;
    const std::uint32_t p = spf[n];
    const bool semiprime = p != n && spf[n / p] == n / p;
    const auto r = triangular_factor(mpz_class(static_cast<unsigned long>(n)));
    if (!semiprime) continue;
    ++found;
    CAPTURE(n);
    REQUIRE(r.ok());
    CHECK(r.p * r.q == n);
    const auto split = triangular_split(mpz_class(static_cast<unsigned long>(n)));
    CHECK(abs(2 * split->cofactor - split->factor) == 1);
  }
  CHECK(found > 0);
}

TEST_CASE("triangular never splits a prime") {
  const auto spf = fixtures::smallest_factor_table(200'000);
  for (std::uint32_t p = 5; p <= 200'000; ++p) {
    if (spf[p] == p) CHECK_FALSE(triangular_factor(p).ok());
  }
}

TEST_CASE("integrate_six") {
  CHECK(integrate_six(mpq_class(-1, 6), 1) == 7);
  CHECK(integrate_six(mpq_class(1, 6), 1) == 5);
  CHECK(integrate_six(0, 0) == 0);
}

TEST_CASE("rectangle_verify") {
  for (const auto& c : fixtures::rectangle_cases()) {
    CHECK(rectangle_verify(c.witness, c.n));
    CHECK(rectangle_area(c.witness) == c.n);
    CHECK(c.p * c.q == c.n);
    CHECK_FALSE(rectangle_verify(c.witness, c.n + 1));
  }
  CHECK(rectangle_verify({1, 1, -1, 1}, 35));
  CHECK_FALSE(rectangle_verify({1, 1, 1, 1}, 35));
  CHECK_FALSE(rectangle_verify({0, 6, 1, 1}, 37));
}

TEST_CASE("rectangle_verify agrees with sixk_form reconstruction") {
  std::mt19937_64 rng(99);
  const auto spf = fixtures::smallest_factor_table(100'000);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 5; p <= 100'000; ++p) {
    if (spf[p] == p) primes.push_back(p);
  }
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int i = 0; i < 1000; ++i) {
    const mpz_class p = primes[pick(rng)];
    const mpz_class q = primes[pick(rng)];
    const mpz_class n = p * q;
    const auto fp = sixk_form(p);
    const auto fq = sixk_form(q);
    const RectangleWitness w{fp.x, fq.x, fp.sign, fq.sign};
    CHECK(rectangle_verify(w, n) == (fp.reconstruct() * fq.reconstruct() == n));
    CHECK(rectangle_verify(w, n));

    // flipping a sign gives a different rectangle
    RectangleWitness other = w;
    if (flip(rng)) {
      other.sign_alpha = -other.sign_alpha;
    } else {
      other.sign_beta = -other.sign_beta;
    }
    const mpz_class other_n = (6 * other.alpha + other.sign_alpha) * (6 * other.beta + other.sign_beta);
    CHECK_FALSE(rectangle_verify(other, n));
    CHECK(rectangle_verify(other, other_n));
  }
}
