#pragma once

// n as the determinant of a 2x2 integer matrix N = P * Q, with det P and
// det Q the two factors.

#include "factorlab/factor_result.hpp"
#include "factorlab/polynomial.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

/// Row-major [[a, b], [c, d]].
struct Matrix2 {
  mpz_class a;
  mpz_class b;
  mpz_class c;
  mpz_class d;

  mpz_class det() const { return a * d - b * c; }
  mpz_class trace() const { return a + d; }

  friend Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// [[a, b], [c, d]] with det n: from a*u + b*v = 1, d = u*n and c = -v*n.
/// Throws UnsupportedInput when gcd(a, b) != 1.
Matrix2 matrix_from_modulus(const mpz_class& n, const mpz_class& a, const mpz_class& b);

/// The generators x1 y1 + x2 y3 - a, ..., (x1 x4 - x2 x3)(y1 y4 - y2 y3) - n
/// of the decomposition ideal for N (n = det N).
std::vector<Polynomial> decomposition_ideal(const Matrix2& N);

struct DecompositionSolution {
  Matrix2 P;
  Matrix2 Q;
};

class DecompositionError : public std::runtime_error {
 public:
  enum class Kind { infeasible, trivial_split, degenerate };

  DecompositionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Partial assignment of (x1, x2, x3, x4, y1, y2, y3, y4), indexed by Var.
using Specialization = std::array<std::optional<mpz_class>, kNumVars>;

/// Solves P * Q = N once x3, x4, y3, y4 are fixed (others may be fixed too):
/// the third and fourth equations give y1, y2, then the first two are a
/// linear system in x1, x2 with determinant det Q. Throws DecompositionError:
/// `infeasible` for non-integral or inconsistent values, `degenerate` when a
/// linear system is singular, `trivial_split` when det P or det Q is +/-1.
/// Throws UnsupportedInput if any of x3, x4, y3, y4 is unset.
DecompositionSolution solve_decomposition(const Matrix2& N, const Specialization& specialization);

/// Tries every (x3, x4, y3, y4) in [-box, box]^4 and returns the first
/// nontrivial decomposition.
std::optional<DecompositionSolution> search_decomposition(const Matrix2& N, int box, const Deadline& deadline = {});

/// Eigenvalue split: if (a + d)^2 - 4n is a square the integer eigenvalues
/// multiply to n. Fails on non-square discriminant or trivial eigenvalues.
FactorResult diagonalization_factor(const Matrix2& N);

struct MdpvOptions {
  mpz_class a = 1;  // first row of N, must be coprime; b defaults to 0
  mpz_class b = 0;
  int box = 3;
  std::uint64_t trace_steps = 100'000;
};

/// Decomposition search on matrix_from_modulus(n, a, b), then eigenvalue
/// splits of that matrix and of the companion matrices [[t, -n], [1, 0]]
/// for traces t walking up from 2 * ceil(sqrt(n)).
FactorResult mdpv_factor(const mpz_class& n, const MdpvOptions& options = {}, const Deadline& deadline = {});

}  // namespace factorlab
