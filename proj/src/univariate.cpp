#include "factorlab/univariate.hpp"

#include "factorlab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

mpz_class evaluate(const UPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int BiPoly::degree_x() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (degree(c[i]) >= 0) return i;
  }
  return -1;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& row : c) d = std::max(d, degree(row));
  return d;
}

mpz_class BiPoly::evaluate(const mpz_class& x, const mpz_class& y) const { return factorlab::evaluate(at_x(x), y); }

UPoly BiPoly::at_x(const mpz_class& x) const {
  UPoly out(std::max(degree_y(), 0) + 1, 0);
  mpz_class xp = 1;
  for (const auto& row : c) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) out[j] += row[j] * xp;
    }
    xp *= x;
  }
  trim(out);
  return out;
}

mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  for (const auto& r : m) {
    if (r.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

mpz_class sylvester_at(const BiPoly& f, const BiPoly& g, int df, int dg, const mpz_class& x) {
  UPoly a = f.at_x(x);
  UPoly b = g.at_x(x);
  a.resize(df + 1, 0);
  b.resize(dg + 1, 0);
  const std::size_t size = df + dg;
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
  for (int i = 0; i < dg; ++i) {
    for (int j = 0; j <= df; ++j) s[i][i + j] = a[df - j];
  }
  for (int i = 0; i < df; ++i) {
    for (int j = 0; j <= dg; ++j) s[dg + i][i + j] = b[dg - j];
  }
  return determinant(std::move(s));
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const UPoly& p) { return QPoly(p.begin(), p.end()); }

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a by b (b nonzero) over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_of(const QPoly& p, const mpz_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

class SturmChain {
 public:
  explicit SturmChain(const QPoly& squarefree) {
    chain_.push_back(squarefree);
    chain_.push_back(derivative(squarefree));
    while (!chain_.back().empty()) {
      QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      for (auto& c : r) c = -c;
      chain_.push_back(std::move(r));
    }
    chain_.pop_back();
  }

  int variations(const mpz_class& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sign_of(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (a, b].
  int count(const mpz_class& a, const mpz_class& b) const { return variations(a) - variations(b); }

 private:
  std::vector<QPoly> chain_;
};

void isolate(const SturmChain& s, const QPoly& p, const mpz_class& a, const mpz_class& b,
             std::vector<mpz_class>& out) {
  if (s.count(a, b) == 0) return;
  if (b - a == 1) {
    if (sign_of(p, b) == 0) out.push_back(b);
    return;
  }
  const mpz_class mid = (a + b) / 2;
  isolate(s, p, a, mid, out);
  isolate(s, p, mid, b, out);
}

}  // namespace

UPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  const int df = std::max(f.degree_y(), 0);
  const int dg = std::max(g.degree_y(), 0);
  const int bound = std::max(f.degree_x(), 0) * dg + std::max(g.degree_x(), 0) * df;

  // Newton divided differences over the nodes 0, 1, ..., bound.
  const std::size_t npts = bound + 1;
  std::vector<mpq_class> coef(npts);
  for (std::size_t i = 0; i < npts; ++i) coef[i] = sylvester_at(f, g, df, dg, mpz_class(static_cast<unsigned long>(i)));
  for (std::size_t level = 1; level < npts; ++level) {
    for (std::size_t i = npts - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / static_cast<unsigned long>(level);
    }
  }
  // Horner expansion of sum coef[i] * x (x - 1) ... (x - i + 1).
  QPoly acc{coef[npts - 1]};
  for (std::size_t i = npts - 1; i-- > 0;) {
    QPoly next(acc.size() + 1, 0);
    const mpq_class node(static_cast<unsigned long>(i));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] -= node * acc[k];
    }
    next[0] += coef[i];
    acc = std::move(next);
  }
  UPoly out;
  for (const auto& c : acc) {
    if (c.get_den() != 1) throw std::logic_error("resultant_y: interpolation produced a non-integer coefficient");
    out.push_back(c.get_num());
  }
  trim(out);
  return out;
}

std::vector<mpz_class> integer_roots(const UPoly& p, const mpz_class& lo, const mpz_class& hi) {
  QPoly q = to_q(p);
  trim(q);
  if (q.empty()) throw DomainError("integer_roots: zero polynomial");
  std::vector<mpz_class> out;
  if (hi < lo || q.size() == 1) return out;
  const QPoly g = gcd(q, derivative(q));
  const QPoly squarefree = g.empty() ? q : divmod(q, g).first;
  if (squarefree.size() <= 1) return out;
  isolate(SturmChain(squarefree), squarefree, lo - 1, hi, out);
  return out;
}

}  // namespace factorlab
