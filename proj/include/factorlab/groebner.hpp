#pragma once

#include "factorlab/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace factorlab {

/// Full normal form of f: no term of the result is divisible by any leading
/// monomial in `basis`, and f - result lies in the ideal generated by `basis`.
Polynomial poly_reduce(const Polynomial& f, std::span<const Polynomial> basis);

/// lcm/LT(f) * f - lcm/LT(g) * g. Throws DomainError if either input is zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct BuchbergerOptions {
  // Upper bound on S-pairs taken off the queue (skipped ones included).
  std::size_t max_pairs = 200'000;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t basis_peak = 0;
};

/// Reduced (inter-reduced, monic) Groebner basis of the ideal spanned by
/// `generators`, sorted by decreasing leading monomial. Pairs are taken by
/// the normal strategy (smallest lcm degree first) with both of Buchberger's
/// criteria. Throws ResourceExhausted when the pair budget runs out.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, const BuchbergerOptions& options = {},
                                   BuchbergerStats* stats = nullptr);

/// Every S-polynomial of the basis reduces to zero modulo it.
bool is_groebner_basis(std::span<const Polynomial> basis);

}  // namespace factorlab
