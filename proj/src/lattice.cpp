#include "factorlab/lattice.hpp"

#include "factorlab/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace factorlab {

LatticeBasis LatticeBasis::identity(std::size_t n) {
  LatticeBasis b;
  b.rows.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) b.rows[i][i] = 1;
  return b;
}

mpz_class dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

void check_shape(const LatticeBasis& basis) {
  for (const auto& r : basis.rows) {
    if (r.size() != basis.dimension()) throw std::invalid_argument("lattice basis has ragged rows");
  }
}

// Nearest integer to num / den (den > 0), halves rounded up.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpz_class r;
  const mpz_class twice = 2 * num + den;
  const mpz_class d2 = 2 * den;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), d2.get_mpz_t());
  return r;
}

// Integral LLL state; indices are 1-based to follow the usual presentation.
class IntegralLll {
 public:
  IntegralLll(std::vector<IntVector>& rows, const mpq_class& delta)
      : b_(rows), m_(rows.size()), p_(delta.get_num()), q_(delta.get_den()), d_(m_ + 1), lambda_(m_ + 1) {
    for (std::size_t i = 1; i <= m_; ++i) lambda_[i].assign(i, 0);
  }

  void run() {
    if (m_ == 0) return;
    d_[0] = 1;
    d_[1] = dot(row(1), row(1));
    if (d_[1] == 0) throw DomainError("lll_reduce: rows are linearly dependent");
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= m_) {
      if (k > kmax) {
        kmax = k;
        gram_schmidt_row(k);
      }
      reduce(k, k - 1);
      const mpz_class& lam = lambda_[k][k - 1];
      if (q_ * d_[k] * d_[k - 2] < p_ * d_[k - 1] * d_[k - 1] - q_ * lam * lam) {
        swap(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
      } else {
        for (std::size_t l = k - 2; l >= 1; --l) reduce(k, l);
        ++k;
      }
    }
  }

 private:
  IntVector& row(std::size_t i) { return b_[i - 1]; }

  void gram_schmidt_row(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      mpz_class u = dot(row(k), row(j));
      for (std::size_t i = 1; i < j; ++i) {
        mpz_class t = d_[i] * u - lambda_[k][i] * lambda_[j][i];
        mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        if (u == 0) throw DomainError("lll_reduce: rows are linearly dependent");
        d_[k] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * abs(lambda_[k][l]) <= d_[l]) return;
    const mpz_class r = round_div(lambda_[k][l], d_[l]);
    IntVector& bk = row(k);
    const IntVector& bl = row(l);
    for (std::size_t c = 0; c < bk.size(); ++c) bk[c] -= r * bl[c];
    lambda_[k][l] -= r * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= r * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(row(k), row(k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const mpz_class lam = lambda_[k][k - 1];
    mpz_class big_b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(big_b.get_mpz_t(), big_b.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const mpz_class t = lambda_[i][k];
      mpz_class nk = d_[k] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(nk.get_mpz_t(), nk.get_mpz_t(), d_[k - 1].get_mpz_t());
      mpz_class nk1 = big_b * t + lam * nk;
      mpz_divexact(nk1.get_mpz_t(), nk1.get_mpz_t(), d_[k].get_mpz_t());
      lambda_[i][k] = nk;
      lambda_[i][k - 1] = nk1;
    }
    d_[k - 1] = big_b;
  }

  std::vector<IntVector>& b_;
  std::size_t m_;
  mpz_class p_;
  mpz_class q_;
  std::vector<mpz_class> d_;
  std::vector<std::vector<mpz_class>> lambda_;
};

struct GramSchmidt {
  std::vector<std::vector<mpq_class>> mu;
  std::vector<mpq_class> norms;  // |b*_i|^2
};

GramSchmidt rational_gram_schmidt(const LatticeBasis& basis) {
  check_shape(basis);
  const std::size_t m = basis.size();
  const std::size_t n = basis.dimension();
  GramSchmidt gs;
  gs.mu.assign(m, std::vector<mpq_class>(m, 0));
  gs.norms.assign(m, 0);
  std::vector<std::vector<mpq_class>> star(m, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < n; ++c) star[i][c] = basis.rows[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class ip = 0;
      for (std::size_t c = 0; c < n; ++c) ip += basis.rows[i][c] * star[j][c];
      gs.mu[i][j] = ip / gs.norms[j];
      for (std::size_t c = 0; c < n; ++c) star[i][c] -= gs.mu[i][j] * star[j][c];
    }
    for (std::size_t c = 0; c < n; ++c) gs.norms[i] += star[i][c] * star[i][c];
    if (gs.norms[i] == 0) throw DomainError("is_reduced: rows are linearly dependent");
  }
  return gs;
}

}  // namespace

LatticeBasis lll_reduce(LatticeBasis basis, const mpq_class& delta) {
  check_shape(basis);
  if (delta <= mpq_class(1, 4) || delta > 1) throw DomainError("lll_reduce: delta must lie in (1/4, 1]");
  if (basis.size() > basis.dimension()) throw DomainError("lll_reduce: more rows than columns");
  IntegralLll(basis.rows, delta).run();
  return basis;
}

bool is_reduced(const LatticeBasis& basis, const mpq_class& delta) {
  const GramSchmidt gs = rational_gram_schmidt(basis);
  const mpq_class half(1, 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(gs.mu[i][j]) > half) return false;
    }
    if (i > 0) {
      const mpq_class& mu = gs.mu[i][i - 1];
      if (gs.norms[i] < (delta - mu * mu) * gs.norms[i - 1]) return false;
    }
  }
  return true;
}

mpz_class gram_determinant(const LatticeBasis& basis) {
  check_shape(basis);
  const std::size_t m = basis.size();
  if (m == 0) return 1;
  std::vector<std::vector<mpz_class>> g(m, std::vector<mpz_class>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g[i][j] = dot(basis.rows[i], basis.rows[j]);
  }
  // Bareiss. Gram matrices are positive semidefinite, so a vanishing leading
  // minor means the whole determinant vanishes.
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (g[k][k] == 0) return 0;
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        g[i][j] = g[i][j] * g[k][k] - g[i][k] * g[k][j];
        mpz_divexact(g[i][j].get_mpz_t(), g[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = g[k][k];
  }
  return g[m - 1][m - 1];
}

std::optional<IntVector> integer_coordinates(const LatticeBasis& basis, const IntVector& v) {
  check_shape(basis);
  const std::size_t m = basis.size();
  if (v.size() != basis.dimension()) throw std::invalid_argument("integer_coordinates: dimension mismatch");
  // Normal equations G c = B v, solved over Q.
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = dot(basis.rows[i], basis.rows[j]);
    a[i][m] = dot(basis.rows[i], v);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw DomainError("integer_coordinates: rows are linearly dependent");
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const mpq_class f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= m; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntVector c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const mpq_class x = a[i][m] / a[i][i];
    if (x.get_den() != 1) return std::nullopt;
    c[i] = x.get_num();
  }
  IntVector back(v.size(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) back[k] += c[i] * basis.rows[i][k];
  }
  if (back != v) return std::nullopt;
  return c;
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.size() != b.size() || a.dimension() != b.dimension()) return false;
  for (const auto& r : b.rows) {
    if (!integer_coordinates(a, r)) return false;
  }
  for (const auto& r : a.rows) {
    if (!integer_coordinates(b, r)) return false;
  }
  return true;
}

std::string to_text(const LatticeBasis& basis) {
  std::string out;
  for (const auto& r : basis.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ' ';
      out += r[i].get_str();
    }
    out += '\n';
  }
  return out;
}

LatticeBasis parse_lattice(std::string_view text) {
  LatticeBasis basis;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    IntVector row;
    std::string tok;
    while (fields >> tok) {
      mpz_class v;
      if (v.set_str(tok, 10) != 0) throw std::invalid_argument("parse_lattice: bad integer '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!basis.rows.empty() && row.size() != basis.dimension()) {
      throw std::invalid_argument("parse_lattice: ragged rows");
    }
    basis.rows.push_back(std::move(row));
  }
  return basis;
}

}  // namespace factorlab
