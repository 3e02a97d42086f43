#pragma once

// A semiprime n = pq with p, q >= 5 is a value of one of the four forms
// n(x, y) = (6x + s1)(6y + s2) = 36xy + 6 s2 x + 6 s1 y + c, c = s1 s2.

#include "factorlab/factor_result.hpp"
#include "factorlab/lattice.hpp"
#include "factorlab/univariate.hpp"

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace factorlab {

struct FormSpec {
  int s1;
  int s2;
  int c;

  mpz_class evaluate(const mpz_class& x, const mpz_class& y) const { return 36 * x * y + 6 * s2 * x + 6 * s1 * y + c; }
  /// form(x, y) - n as a bivariate integer polynomial.
  BiPoly shifted(const mpz_class& n) const;
  std::string to_string() const;
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

/// (-1,-1,+1), (+1,+1,+1), (+1,-1,-1), (-1,+1,-1).
inline constexpr std::array<FormSpec, 4> kForms = {{{-1, -1, 1}, {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}}};

/// The two forms whose constant matches n mod 6. Throws UnsupportedInput
/// when gcd(n, 6) != 1.
std::vector<FormSpec> candidate_forms(const mpz_class& n);

/// (6x + s1, 6y + s2).
std::pair<mpz_class, mpz_class> roots_to_factors(const FormSpec& form, const mpz_class& x, const mpz_class& y);

using Root = std::pair<mpz_class, mpz_class>;

struct SmallRootProblem {
  FormSpec form;
  mpz_class n;
  mpz_class X;
  mpz_class Y;
  mpz_class M;

  /// max |n_ij| X^i Y^j over the monomials of the form.
  mpz_class W() const;
};

/// Smallest prime above 4n.
mpz_class default_auxiliary_modulus(const mpz_class& n);

/// Every (x, y) in [1, X] x [1, Y] with form(x, y) = n, solving for y at
/// each x. Throws ResourceExhausted when X * Y > 2^32.
std::vector<Root> brute_force_roots(const SmallRootProblem& problem);

struct BoundCheck {
  bool satisfied;
  mpz_class W;
  mpz_class xy_cubed;
  std::string diagnostic;
};

/// Whether XY < W^(1/3), compared as (XY)^3 < W.
BoundCheck integer_bound_check(const SmallRootProblem& problem);

/// Shift-polynomial lattice for f = form - n modulo M: for 0 <= a, b <= t
/// with k = min(a, b), the row x^(a-k) y^(b-k) f'^k M^(t-k), where f' is f
/// made monic in xy mod M, scaled by X^i Y^j. After LLL the short rows are
/// paired with each other and with f, y is eliminated by resultant, and
/// every candidate is checked by exact evaluation.
/// Throws UnsupportedInput if (XY)^2 >= M, M <= n or gcd(M, 6) != 1, and
/// DomainError("algebraically dependent short vectors") when every
/// resultant vanishes.
std::vector<Root> coppersmith_bivariate(const SmallRootProblem& problem, unsigned lattice_param = 2);

/// The lattice basis built by coppersmith_bivariate, before reduction.
LatticeBasis coppersmith_lattice(const SmallRootProblem& problem, unsigned lattice_param);

/// Factoring wrappers over both candidate forms with X ~ sqrt(n)/6 and
/// Y ~ n/30 (the smaller factor sits in x for one of the two forms).
FactorResult mafpv_brute_factor(const mpz_class& n, const Deadline& deadline = {});
FactorResult mafpv_lattice_factor(const mpz_class& n, unsigned lattice_param = 2, const Deadline& deadline = {});

}  // namespace factorlab
