#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factorlab {

using IntVector = std::vector<mpz_class>;

/// Integer row vectors spanning a lattice. All rows share one dimension.
struct LatticeBasis {
  std::vector<IntVector> rows;

  std::size_t size() const { return rows.size(); }
  std::size_t dimension() const { return rows.empty() ? 0 : rows.front().size(); }
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

  static LatticeBasis identity(std::size_t n);
};

mpz_class dot(const IntVector& a, const IntVector& b);

/// LLL reduction in exact integer arithmetic (the integral variant, which
/// carries d_i = Gram minors and lambda_ij = d_j * mu_ij instead of rationals).
/// Throws DomainError on dependent rows or delta outside (1/4, 1],
/// std::invalid_argument on ragged rows.
LatticeBasis lll_reduce(LatticeBasis basis, const mpq_class& delta = mpq_class(3, 4));

/// Size-reduced (|mu_ij| <= 1/2) and Lovasz with `delta`, checked with a
/// rational Gram-Schmidt. Throws DomainError on dependent rows.
bool is_reduced(const LatticeBasis& basis, const mpq_class& delta = mpq_class(3, 4));

/// det(B B^T), exact (fraction-free elimination).
mpz_class gram_determinant(const LatticeBasis& basis);

/// Integer coefficients c with sum c_i * rows_i == v, if they exist.
/// Rows must be independent.
std::optional<IntVector> integer_coordinates(const LatticeBasis& basis, const IntVector& v);

/// Each basis lies in the lattice of the other.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

/// One row per line, entries separated by single spaces.
std::string to_text(const LatticeBasis& basis);
LatticeBasis parse_lattice(std::string_view text);

}  // namespace factorlab
