#include "factorlab/mafpv.hpp"

#include "factorlab/arith.hpp"
#include "factorlab/errors.hpp"

#include <algorithm>
#include <set>

namespace factorlab {

BiPoly FormSpec::shifted(const mpz_class& n) const {
  BiPoly f;
  f.c = {{c - n, 6 * s1}, {6 * s2, 36}};
  return f;
}

std::string FormSpec::to_string() const {
  auto sign = [](int s) { return s > 0 ? '+' : '-'; };
  return std::string("36xy ") + sign(s2) + " 6x " + sign(s1) + " 6y " + sign(c) + " 1";
}

std::vector<FormSpec> candidate_forms(const mpz_class& n) {
  if (n <= 0 || gcd(n, mpz_class(6)) != 1) {
    throw UnsupportedInput("candidate_forms: n must be positive and coprime to 6, got " + n.get_str());
  }
  const int c = mpz_fdiv_ui(n.get_mpz_t(), 6) == 1 ? 1 : -1;
  std::vector<FormSpec> out;
  for (const auto& f : kForms) {
    if (f.c == c) out.push_back(f);
  }
  return out;
}

std::pair<mpz_class, mpz_class> roots_to_factors(const FormSpec& form, const mpz_class& x, const mpz_class& y) {
  return {6 * x + form.s1, 6 * y + form.s2};
}

mpz_class SmallRootProblem::W() const {
  mpz_class w = 1;
  for (const mpz_class& t : {mpz_class(6 * X), mpz_class(6 * Y), mpz_class(36 * X * Y)}) w = std::max(w, t);
  return w;
}

mpz_class default_auxiliary_modulus(const mpz_class& n) { return next_prime(4 * n); }

std::vector<Root> brute_force_roots(const SmallRootProblem& problem) {
  const auto& [form, n, X, Y, M] = problem;
  if (X < 1 || Y < 1) throw UnsupportedInput("brute_force_roots: bounds must be positive");
  if (X * Y > (mpz_class(1) << 32)) {
    throw ResourceExhausted("brute_force_roots: X*Y = " + mpz_class(X * Y).get_str() + " exceeds 2^32");
  }
  // y >= 1 forces n - 6 s2 x - c >= 36 x + 6 s1.
  mpz_class xmax = (n - form.c - 6 * form.s1) / (36 + 6 * form.s2);
  xmax = std::min(xmax, X);
  std::vector<Root> out;
  for (mpz_class x = 1; x <= xmax; ++x) {
    const mpz_class num = n - 6 * form.s2 * x - form.c;
    const mpz_class den = 36 * x + 6 * form.s1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
    const mpz_class y = num / den;
    if (y >= 1 && y <= Y) out.emplace_back(x, y);
  }
  return out;
}

BoundCheck integer_bound_check(const SmallRootProblem& problem) {
  BoundCheck r;
  r.W = problem.W();
  const mpz_class xy = problem.X * problem.Y;
  r.xy_cubed = xy * xy * xy;
  r.satisfied = r.xy_cubed < r.W;
  r.diagnostic = "(XY)^3 = " + r.xy_cubed.get_str() + (r.satisfied ? " < " : " >= ") + "W = " + r.W.get_str();
  if (!r.satisfied) r.diagnostic += " (gap " + mpz_class(r.xy_cubed - r.W).get_str() + ")";
  return r;
}

namespace {

using Grid = std::vector<std::vector<mpz_class>>;

Grid multiply_mod(const Grid& a, const Grid& b, const mpz_class& mod) {
  Grid r(a.size() + b.size() - 1, std::vector<mpz_class>(a[0].size() + b[0].size() - 1, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t l = 0; l < b[k].size(); ++l) r[i + k][j + l] += a[i][j] * b[k][l];
      }
    }
  }
  for (auto& row : r) {
    for (auto& v : row) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  }
  return r;
}

void check_lattice_problem(const SmallRootProblem& p, unsigned t) {
  if (t == 0) throw UnsupportedInput("coppersmith_bivariate: lattice_param must be positive");
  if (p.X < 1 || p.Y < 1) throw UnsupportedInput("coppersmith_bivariate: bounds must be positive");
  if (p.M <= p.n) throw UnsupportedInput("coppersmith_bivariate: M must exceed n");
  if (gcd(p.M, mpz_class(6)) != 1) throw UnsupportedInput("coppersmith_bivariate: M must be coprime to 6");
  const mpz_class xy = p.X * p.Y;
  if (xy * xy >= p.M) {
    throw UnsupportedInput("coppersmith_bivariate: bound violated, (XY)^2 = " + mpz_class(xy * xy).get_str() +
                           " >= M = " + p.M.get_str());
  }
}

}  // namespace

LatticeBasis coppersmith_lattice(const SmallRootProblem& problem, unsigned t) {
  check_lattice_problem(problem, t);
  const auto& [form, n, X, Y, M] = problem;
  mpz_class inv36;
  const mpz_class c36 = 36;
  mpz_invert(inv36.get_mpz_t(), c36.get_mpz_t(), M.get_mpz_t());

  // f' = f / 36 mod M, monic in xy
  const BiPoly f = form.shifted(n);
  Grid fm = f.c;
  for (auto& row : fm) {
    for (auto& v : row) {
      v *= inv36;
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
    }
  }

  const std::size_t side = t + 1;
  std::vector<Grid> fpow{Grid{{1}}};
  std::vector<mpz_class> mpow{1};
  for (unsigned k = 1; k <= t; ++k) {
    mpow.push_back(mpow.back() * M);
    fpow.push_back(multiply_mod(fpow.back(), fm, mpow.back()));
  }
  std::vector<mpz_class> xpow{1}, ypow{1};
  for (unsigned k = 1; k <= t; ++k) {
    xpow.push_back(xpow.back() * X);
    ypow.push_back(ypow.back() * Y);
  }

  LatticeBasis basis;
  for (std::size_t a = 0; a <= t; ++a) {
    for (std::size_t b = 0; b <= t; ++b) {
      const std::size_t k = std::min(a, b);
      IntVector row(side * side, 0);
      const Grid& g = fpow[k];
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g[i].size(); ++j) {
          const std::size_t ei = i + a - k;
          const std::size_t ej = j + b - k;
          row[ei * side + ej] = g[i][j] * mpow[t - k] * xpow[ei] * ypow[ej];
        }
      }
      basis.rows.push_back(std::move(row));
    }
  }
  return basis;
}

std::vector<Root> coppersmith_bivariate(const SmallRootProblem& problem, unsigned t) {
  const LatticeBasis reduced = lll_reduce(coppersmith_lattice(problem, t));
  const auto& [form, n, X, Y, M] = problem;
  const std::size_t side = t + 1;

  std::vector<BiPoly> shorts;
  for (const auto& row : reduced.rows) {
    BiPoly h;
    h.c.assign(side, std::vector<mpz_class>(side, 0));
    mpz_class xp = 1;
    for (std::size_t i = 0; i < side; ++i, xp *= X) {
      mpz_class scale = xp;
      for (std::size_t j = 0; j < side; ++j, scale *= Y) {
        mpz_divexact(h.c[i][j].get_mpz_t(), row[i * side + j].get_mpz_t(), scale.get_mpz_t());
      }
    }
    shorts.push_back(std::move(h));
  }

  const BiPoly f = form.shifted(n);
  std::vector<std::pair<const BiPoly*, const BiPoly*>> pairs;
  for (const auto& h : shorts) pairs.emplace_back(&h, &f);
  const std::size_t head = std::min<std::size_t>(shorts.size(), 4);
  for (std::size_t i = 0; i < head; ++i) {
    for (std::size_t j = i + 1; j < head; ++j) pairs.emplace_back(&shorts[i], &shorts[j]);
  }

  std::set<Root> found;
  bool any_nonzero = false;
  for (const auto& [g, h] : pairs) {
    const UPoly res = resultant_y(*g, *h);
    if (degree(res) < 0) continue;
    any_nonzero = true;
    for (const mpz_class& x : integer_roots(res, 1, X)) {
      // f is linear in y once x is fixed
      const mpz_class num = n - 6 * form.s2 * x - form.c;
      const mpz_class den = 36 * x + 6 * form.s1;
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
      const mpz_class y = num / den;
      if (y >= 1 && y <= Y && form.evaluate(x, y) == n) found.emplace(x, y);
    }
  }
  if (!any_nonzero) throw DomainError("algebraically dependent short vectors");
  return {found.begin(), found.end()};
}

namespace {

struct SearchBox {
  mpz_class X;
  mpz_class Y;
};

SearchBox factor_box(const mpz_class& n) { return {(isqrt(n) + 1) / 6 + 1, (n / 5 + 1) / 6 + 1}; }

FactorResult first_root(const mpz_class& n, const FormSpec& form, const std::vector<Root>& roots,
                        const std::string& method) {
  for (const auto& [x, y] : roots) {
    const auto [p, q] = roots_to_factors(form, x, y);
    if (p * q == n) return FactorResult::success(n, p, method);
  }
  return FactorResult::failure(n, method, "no root");
}

}  // namespace

FactorResult mafpv_brute_factor(const mpz_class& n, const Deadline& deadline) {
  static const std::string kMethod = "mafpv-brute";
  Stopwatch watch;
  const SearchBox box = factor_box(n);
  for (const FormSpec& form : candidate_forms(n)) {
    if (deadline.expired()) return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    std::vector<Root> roots;
    try {
      roots = brute_force_roots({form, n, box.X, box.Y, default_auxiliary_modulus(n)});
    } catch (const ResourceExhausted& e) {
      return watch.stamp(FactorResult::failure(n, kMethod, e.what()));
    }
    if (auto r = first_root(n, form, roots, kMethod); r.ok()) return watch.stamp(std::move(r));
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "no root of either candidate form"));
}

FactorResult mafpv_lattice_factor(const mpz_class& n, unsigned lattice_param, const Deadline& deadline) {
  static const std::string kMethod = "mafpv-lattice";
  Stopwatch watch;
  const SearchBox box = factor_box(n);
  const mpz_class xy = box.X * box.Y;
  const mpz_class M = next_prime(std::max(mpz_class(4 * n), mpz_class(xy * xy)));
  std::string last = "no verified root from the lattice";
  for (const FormSpec& form : candidate_forms(n)) {
    if (deadline.expired()) return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    try {
      const auto roots = coppersmith_bivariate({form, n, box.X, box.Y, M}, lattice_param);
      if (auto r = first_root(n, form, roots, kMethod); r.ok()) return watch.stamp(std::move(r));
    } catch (const DomainError& e) {
      last = e.what();
    }
  }
  return watch.stamp(FactorResult::failure(n, kMethod, last));
}

}  // namespace factorlab
