#include "factorlab/rpv.hpp"

#include "factorlab/arith.hpp"
#include "factorlab/errors.hpp"

namespace factorlab {

mpq_class integrate_six(const mpq_class& lower, const mpq_class& upper) {
  auto antiderivative = [](const mpq_class& x) { return mpq_class(6 * x); };
  return antiderivative(upper) - antiderivative(lower);
}

mpq_class rectangle_area(const RectangleWitness& w) {
  const mpq_class lower_x(-w.sign_alpha, 6);
  const mpq_class lower_y(-w.sign_beta, 6);
  // Fubini: the double integral of a product splits into two single integrals.
  return integrate_six(lower_x, mpq_class(w.alpha)) * integrate_six(lower_y, mpq_class(w.beta));
}

bool rectangle_verify(const RectangleWitness& w, const mpz_class& n) {
  if (w.alpha < 1 || w.beta < 1) return false;
  if ((w.sign_alpha != 1 && w.sign_alpha != -1) || (w.sign_beta != 1 && w.sign_beta != -1)) return false;
  return rectangle_area(w) == mpq_class(n);
}

std::optional<TriangularSplit> triangular_split(const mpz_class& n) {
  if (n < 4) return std::nullopt;
  const auto root = perfect_square_root(8 * n + 1);
  if (!root) return std::nullopt;
  // 8n + 1 is odd, so its root is odd and both candidates are integers.
  for (const mpz_class& candidate : {mpz_class((*root - 1) / 2), mpz_class((*root + 1) / 2)}) {
    if (candidate <= 1 || !mpz_divisible_p(n.get_mpz_t(), candidate.get_mpz_t())) continue;
    mpz_class cofactor = n / candidate;
    if (cofactor == 1) continue;
    return TriangularSplit{*root, candidate, std::move(cofactor)};
  }
  return std::nullopt;
}

FactorResult triangular_factor(const mpz_class& n) {
  static const std::string kMethod = "triangular";
  Stopwatch watch;
  if (n < 4) throw UnsupportedInput("triangular_factor: n must be >= 4, got " + n.get_str());
  if (!is_perfect_square(8 * n + 1)) return watch.stamp(FactorResult::failure(n, kMethod, "not triangular"));
  const auto split = triangular_split(n);
  if (!split) return watch.stamp(FactorResult::failure(n, kMethod, "trivial cofactor"));
  return watch.stamp(FactorResult::success(n, split->factor, kMethod));
}

}  // namespace factorlab
