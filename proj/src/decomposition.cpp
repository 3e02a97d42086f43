#include "factorlab/decomposition.hpp"

#include "factorlab/arith.hpp"
#include "factorlab/errors.hpp"

namespace factorlab {

Matrix2 matrix_from_modulus(const mpz_class& n, const mpz_class& a, const mpz_class& b) {
  if (a == 0 && b == 0) throw UnsupportedInput("matrix_from_modulus: entries are both zero");
  const ExtGcd e = ext_gcd(a, b);
  if (e.g != 1) throw UnsupportedInput("matrix_from_modulus: entries not coprime (gcd " + e.g.get_str() + ")");
  return Matrix2{a, b, -e.v * n, e.u * n};
}

std::vector<Polynomial> decomposition_ideal(const Matrix2& N) {
  const std::map<std::string, mpz_class, std::less<>> constants = {
      {"a", N.a}, {"b", N.b}, {"c", N.c}, {"d", N.d}, {"n", N.det()}};
  return {
      parse_polynomial("x1*y1 + x2*y3 - a", constants),
      parse_polynomial("x1*y2 + x2*y4 - b", constants),
      parse_polynomial("x3*y1 + x4*y3 - c", constants),
      parse_polynomial("x3*y2 + x4*y4 - d", constants),
      parse_polynomial("(x1*x4 - x2*x3)*(y1*y4 - y2*y3) - n", constants),
  };
}

namespace {

using Kind = DecompositionError::Kind;

// Solves x3 * y = rhs for y, honouring a pre-fixed value.
mpz_class solve_row(const mpz_class& x3, const mpz_class& rhs, const std::optional<mpz_class>& fixed, const char* name) {
  if (fixed) {
    if (x3 * *fixed != rhs) {
      throw DecompositionError(Kind::infeasible, std::string("specialization infeasible: fixed ") + name +
                                                     " contradicts the lower row of N");
    }
    return *fixed;
  }
  if (x3 == 0) {
    if (rhs != 0) throw DecompositionError(Kind::infeasible, "specialization infeasible: x3 = 0 but row is nonzero");
    throw DecompositionError(Kind::degenerate, std::string("degenerate specialization: x3 = 0 leaves ") + name +
                                                   " undetermined");
  }
  if (!mpz_divisible_p(rhs.get_mpz_t(), x3.get_mpz_t())) {
    throw DecompositionError(Kind::infeasible, std::string("specialization infeasible: ") + name + " is not integral");
  }
  return rhs / x3;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const std::optional<mpz_class>& fixed,
                         const char* name) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw DecompositionError(Kind::infeasible, std::string("specialization infeasible: ") + name + " is not integral");
  }
  mpz_class q = num / den;
  if (fixed && *fixed != q) {
    throw DecompositionError(Kind::infeasible,
                             std::string("specialization infeasible: fixed ") + name + " contradicts the solution");
  }
  return q;
}

}  // namespace

DecompositionSolution solve_decomposition(const Matrix2& N, const Specialization& s) {
  for (Var v : {x3, x4, y3, y4}) {
    if (!s[v]) throw UnsupportedInput("solve_decomposition: x3, x4, y3 and y4 must all be fixed");
  }
  const mpz_class& vx3 = *s[x3];
  const mpz_class& vx4 = *s[x4];
  const mpz_class& vy3 = *s[y3];
  const mpz_class& vy4 = *s[y4];

  // lower row of P*Q: x3 y1 + x4 y3 = c, x3 y2 + x4 y4 = d
  const mpz_class vy1 = solve_row(vx3, N.c - vx4 * vy3, s[y1], "y1");
  const mpz_class vy2 = solve_row(vx3, N.d - vx4 * vy4, s[y2], "y2");

  // upper row: [y1 y3; y2 y4] (x1, x2)^T = (a, b)^T, Cramer's rule
  const mpz_class det_q = vy1 * vy4 - vy2 * vy3;
  if (det_q == 0) throw DecompositionError(Kind::degenerate, "degenerate specialization: det Q = 0");
  const mpz_class vx1 = exact_quotient(N.a * vy4 - N.b * vy3, det_q, s[x1], "x1");
  const mpz_class vx2 = exact_quotient(N.b * vy1 - N.a * vy2, det_q, s[x2], "x2");

  DecompositionSolution sol{Matrix2{vx1, vx2, vx3, vx4}, Matrix2{vy1, vy2, vy3, vy4}};
  if (sol.P * sol.Q != N) throw std::logic_error("solve_decomposition: P * Q != N");
  const mpz_class det_p = sol.P.det();
  if (det_p * det_q != N.det()) throw std::logic_error("solve_decomposition: det P * det Q != det N");
  if (abs(det_p) == 1 || abs(det_q) == 1) {
    throw DecompositionError(Kind::trivial_split, "trivial split: det P = " + det_p.get_str() +
                                                      ", det Q = " + det_q.get_str());
  }
  return sol;
}

std::optional<DecompositionSolution> search_decomposition(const Matrix2& N, int box, const Deadline& deadline) {
  Specialization s;
  for (int a = -box; a <= box; ++a) {
    if (a == 0) continue;  // x3 = 0 never determines y1, y2
    if (deadline.expired()) return std::nullopt;
    for (int b = -box; b <= box; ++b) {
      for (int c = -box; c <= box; ++c) {
        for (int d = -box; d <= box; ++d) {
          s[x3] = a;
          s[x4] = b;
          s[y3] = c;
          s[y4] = d;
          try {
            return solve_decomposition(N, s);
          } catch (const DecompositionError&) {
          }
        }
      }
    }
  }
  return std::nullopt;
}

FactorResult diagonalization_factor(const Matrix2& N) {
  static const std::string kMethod = "diagonalization";
  Stopwatch watch;
  const mpz_class n = N.det();
  if (n < 4) return watch.stamp(FactorResult::failure(n, kMethod, "determinant below 4"));
  const mpz_class t = N.trace();
  const mpz_class disc = t * t - 4 * n;
  if (sgn(disc) < 0) return watch.stamp(FactorResult::failure(n, kMethod, "discriminant negative"));
  const auto s = perfect_square_root(disc);
  if (!s) return watch.stamp(FactorResult::failure(n, kMethod, "discriminant not a square"));
  if (mpz_odd_p(mpz_class(t + *s).get_mpz_t())) {
    return watch.stamp(FactorResult::failure(n, kMethod, "eigenvalues not integral"));
  }
  const mpz_class l1 = (t + *s) / 2;
  const mpz_class l2 = (t - *s) / 2;
  if (l1 * l2 != n || l1 + l2 != t) throw std::logic_error("diagonalization_factor: eigenvalue identity violated");
  for (const mpz_class& l : {l1, l2}) {
    const mpz_class m = abs(l);
    if (m == 1 || m == n) return watch.stamp(FactorResult::failure(n, kMethod, "trivial eigenvalues"));
  }
  return watch.stamp(FactorResult::success(n, abs(l1), kMethod));
}

FactorResult mdpv_factor(const mpz_class& n, const MdpvOptions& options, const Deadline& deadline) {
  static const std::string kMethod = "mdpv";
  Stopwatch watch;
  if (n < 4) throw UnsupportedInput("mdpv_factor: n must be >= 4, got " + n.get_str());

  const Matrix2 N = matrix_from_modulus(n, options.a, options.b);
  if (auto sol = search_decomposition(N, options.box, deadline)) {
    return watch.stamp(FactorResult::success(n, abs(sol->P.det()), kMethod));
  }
  if (auto r = diagonalization_factor(N); r.ok()) {
    r.method = kMethod;
    return watch.stamp(std::move(r));
  }

  mpz_class t = isqrt(4 * n);
  if (t * t < 4 * n) ++t;
  for (std::uint64_t step = 0; step < options.trace_steps; ++step, ++t) {
    if (step % 1024 == 0 && deadline.expired()) {
      return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    }
    if (auto r = diagonalization_factor(Matrix2{t, -n, 1, 0}); r.ok()) {
      r.method = kMethod;
      return watch.stamp(std::move(r));
    }
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "no nontrivial decomposition found"));
}

}  // namespace factorlab
