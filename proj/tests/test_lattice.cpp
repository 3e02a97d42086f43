#include "factorlab/errors.hpp"
#include "factorlab/lattice.hpp"
#include "factorlab/univariate.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace factorlab;

namespace {

LatticeBasis random_basis(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    LatticeBasis b;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector row;
      for (std::size_t j = 0; j < n; ++j) row.emplace_back(d(rng));
      b.rows.push_back(std::move(row));
    }
    if (gram_determinant(b) != 0) return b;
  }
}

// Smallest nonzero squared norm over coefficient vectors in [-r, r]^3.
mpz_class shortest_by_enumeration(const LatticeBasis& b, int r) {
  mpz_class best = -1;
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) {
      for (int k = -r; k <= r; ++k) {
        if (!i && !j && !k) continue;
        IntVector v(b.dimension());
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = i * b.rows[0][c] + j * b.rows[1][c] + k * b.rows[2][c];
        const mpz_class n = dot(v, v);
        if (best < 0 || n < best) best = n;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("identity is reduced and fixed") {
  for (std::size_t n : {1u, 2u, 5u}) {
    const auto I = LatticeBasis::identity(n);
    CHECK(is_reduced(I));
    CHECK(lll_reduce(I) == I);
    CHECK(gram_determinant(I) == 1);
  }
}

TEST_CASE("is_reduced examples") {
  CHECK(is_reduced({{{0, 1}, {1, 0}}}));
  CHECK_FALSE(is_reduced({{{1, 0}, {100, 1}}}));
  CHECK_THROWS_AS(is_reduced({{{1, 2}, {2, 4}}}), DomainError);
  // size-reduced, but the second vector is far shorter than the first
  CHECK_FALSE(is_reduced({{{10, 0}, {0, 1}}}));
  CHECK_FALSE(is_reduced({{{10, 0}, {5, 1}}}));
  CHECK(is_reduced({{{1, 0}, {0, 10}}}));
}

TEST_CASE("lll on the three-vector example") {
  const LatticeBasis b{{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}}};
  const auto r = lll_reduce(b);
  CHECK(is_reduced(r));
  CHECK(gram_determinant(r) == gram_determinant(b));
  CHECK(same_lattice(r, b));
  CHECK(dot(r.rows[0], r.rows[0]) <= 2);
  const mpz_class shortest = shortest_by_enumeration(b, 6);
  CHECK(shortest == 1);
  CHECK(dot(r.rows[0], r.rows[0]) == shortest);
  CHECK(to_text(r) == "0 1 0\n1 0 1\n-1 0 2\n");
}

TEST_CASE("lll input validation") {
  CHECK_THROWS_AS(lll_reduce({{{1, 2}, {2, 4}}}), DomainError);
  CHECK_THROWS_AS(lll_reduce({{{1, 0}, {0, 1}}}, mpq_class(1, 4)), DomainError);
  CHECK_THROWS_AS(lll_reduce({{{1, 0}, {0, 1}}}, mpq_class(5, 4)), DomainError);
  CHECK_THROWS_AS(lll_reduce({{{1, 0}, {0, 1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(lll_reduce({{{1}, {2}}}), DomainError);
  CHECK(is_reduced(lll_reduce({{{3, 4}, {1, 1}}}, 1), 1));
}

TEST_CASE("lll postconditions on random bases") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 100; ++i) {
    for (std::size_t n : {3u, 5u}) {
      const auto b = random_basis(rng, n, 50);
      const auto r = lll_reduce(b);
      CHECK(is_reduced(r));
      CHECK(gram_determinant(r) == gram_determinant(b));
      CHECK(same_lattice(r, b));
    }
  }
}

TEST_CASE("non-square bases") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 50; ++i) {
    LatticeBasis b;
    for (int k = 0; k < 3; ++k) {
      IntVector row;
      for (int j = 0; j < 6; ++j) row.emplace_back(d(rng));
      b.rows.push_back(row);
    }
    if (gram_determinant(b) == 0) continue;
    const auto r = lll_reduce(b, mpq_class(99, 100));
    CHECK(is_reduced(r, mpq_class(99, 100)));
    CHECK(same_lattice(r, b));
  }
}

TEST_CASE("first vector within 2^(m-1) of the shortest") {
  std::mt19937_64 rng(1618);
  for (int i = 0; i < 60; ++i) {
    const auto b = random_basis(rng, 3, 20);
    const auto r = lll_reduce(b);
    // enumerate around the reduced basis, whose coordinates of a shortest vector are small
    const mpz_class shortest = shortest_by_enumeration(r, 4);
    CHECK(dot(r.rows[0], r.rows[0]) <= 4 * shortest);
  }
}

TEST_CASE("permuting a reduced basis") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 30; ++i) {
    auto r = lll_reduce(random_basis(rng, 4, 30));
    auto p = r;
    std::shuffle(p.rows.begin(), p.rows.end(), rng);
    const auto again = lll_reduce(p);
    CHECK(is_reduced(again));
    CHECK(same_lattice(again, r));
  }
}

TEST_CASE("integer coordinates") {
  const LatticeBasis b{{{2, 0}, {0, 3}}};
  CHECK(integer_coordinates(b, {4, 9}) == IntVector{2, 3});
  CHECK_FALSE(integer_coordinates(b, {1, 0}));
  CHECK_FALSE(same_lattice(b, LatticeBasis::identity(2)));
  CHECK(same_lattice(b, {{{2, 3}, {0, 3}}}));
}

TEST_CASE("text round trip") {
  const LatticeBasis b{{{1, -2, 30}, {0, 0, 123456789012345678}}};
  const auto text = to_text(b);
  CHECK(text == "1 -2 30\n0 0 123456789012345678\n");
  CHECK(parse_lattice(text) == b);
  CHECK(parse_lattice("\n1 2\n\n3 4\n") == LatticeBasis{{{1, 2}, {3, 4}}});
}

TEST_CASE("univariate helpers") {
  UPoly p{6, -5, 1, 0, 0};
  trim(p);
  CHECK(p.size() == 3);
  CHECK(degree(p) == 2);
  CHECK(degree(UPoly{0, 0}) == -1);
  CHECK(evaluate(p, 3) == 0);
  CHECK(determinant({{2, 1}, {7, 4}}) == 1);
  CHECK(determinant({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
}

TEST_CASE("integer_roots") {
  // (x - 2)(x - 3)^2 (x + 5)(x^2 + 1)
  UPoly prod(1, 1);
  for (const UPoly& f : {UPoly{-2, 1}, UPoly{-3, 1}, UPoly{-3, 1}, UPoly{5, 1}, UPoly{1, 0, 1}}) {
    UPoly next(prod.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
    }
    prod = next;
  }
  CHECK(integer_roots(prod, -10, 10) == std::vector<mpz_class>{-5, 2, 3});
  CHECK(integer_roots(prod, 1, 2) == std::vector<mpz_class>{2});
  CHECK(integer_roots(prod, 4, 100).empty());
  CHECK(integer_roots(UPoly{1, 0, 1}, -100, 100).empty());
  CHECK(integer_roots(UPoly{7}, -100, 100).empty());
  CHECK_THROWS_AS(integer_roots(UPoly{0}, 0, 1), DomainError);
}

TEST_CASE("resultant_y") {
  // f = y - x, g = y^2 - 4: Res_y = x^2 - 4
  BiPoly f{{{0, 1}, {-1}}};
  BiPoly g{{{-4, 0, 1}}};
  UPoly r = resultant_y(f, g);
  trim(r);
  CHECK(r == UPoly{-4, 0, 1});

  // common roots of 36xy - 6x + 6y - 1 - 899 and x - y are x = y = 5
  BiPoly h{{{-900, 6}, {-6, 36}}};
  BiPoly d{{{0, -1}, {1}}};
  UPoly s = resultant_y(h, d);
  trim(s);
  CHECK(evaluate(s, 5) == 0);
  CHECK(integer_roots(s, 1, 100) == std::vector<mpz_class>{5});
  CHECK(h.evaluate(5, 5) == 0);
  CHECK(h.degree_x() == 1);
  CHECK(h.degree_y() == 1);
  CHECK(h.at_x(5) == UPoly{-930, 186});
}
