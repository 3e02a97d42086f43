#pragma once

// Rectangle view of a semiprime: n as the area (6a + sa)(6b + sb) of a
// rectangle, and the triangular-number shortcut n = k(k + 1) / 2.

#include "factorlab/factor_result.hpp"

#include <gmpxx.h>

#include <optional>

namespace factorlab {

/// (6 alpha + sign_alpha) * (6 beta + sign_beta). A sign of +1 corresponds to
/// integrating 6 dx from -1/6, a sign of -1 to integrating from +1/6.
struct RectangleWitness {
  mpz_class alpha;
  mpz_class beta;
  int sign_alpha = 1;
  int sign_beta = 1;
};

/// Definite integral of 6 dx from `lower` to `upper` via its antiderivative 6x.
mpq_class integrate_six(const mpq_class& lower, const mpq_class& upper);

/// The double integral of 6 * 6 over the witness rectangle, exactly.
mpq_class rectangle_area(const RectangleWitness& w);

/// True iff the witness rectangle has area n. Returns false when alpha or beta < 1.
bool rectangle_verify(const RectangleWitness& w, const mpz_class& n);

/// What the triangular test recovered: sqrt(8n + 1), the divisor it picked
/// from {(s - 1) / 2, (s + 1) / 2}, and n divided by that divisor.
struct TriangularSplit {
  mpz_class root;
  mpz_class factor;
  mpz_class cofactor;
};

/// nullopt when 8n + 1 is not a square or no candidate splits n nontrivially.
std::optional<TriangularSplit> triangular_split(const mpz_class& n);

/// Wraps triangular_split into a FactorResult (p <= q). Requires n >= 4.
FactorResult triangular_factor(const mpz_class& n);

}  // namespace factorlab
