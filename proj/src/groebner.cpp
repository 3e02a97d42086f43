#include "factorlab/groebner.hpp"

#include "factorlab/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace factorlab {

Polynomial poly_reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  Polynomial remainder;
  Polynomial work = f;
  while (!work.is_zero()) {
    const Monomial lm = work.leading_monomial();
    const mpq_class lc = work.leading_coefficient();
    bool divided = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
      work.subtract_multiple(lc / g.leading_coefficient(), lm / g.leading_monomial(), g);
      divided = true;
      break;
    }
    if (!divided) {
      remainder += Polynomial::term(lc, lm);
      work -= Polynomial::term(lc, lm);
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial: zero input");
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s;
  s.subtract_multiple(-1 / f.leading_coefficient(), l / f.leading_monomial(), f);
  s.subtract_multiple(1 / g.leading_coefficient(), l / g.leading_monomial(), g);
  return s;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;

  // normal strategy: lowest lcm degree first, then lowest lcm in lex, then index order
  bool operator<(const Pair& o) const {
    const auto di = lcm.degree();
    const auto dj = o.lcm.degree();
    if (di != dj) return di < dj;
    if (lcm != o.lcm) return lcm < o.lcm;
    return std::tie(i, j) < std::tie(o.i, o.j);
  }
};

std::pair<std::size_t, std::size_t> key(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

// Keeps one polynomial per minimal leading monomial, then reduces each against the rest.
std::vector<Polynomial> inter_reduce(std::vector<Polynomial> g) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = g[i].leading_monomial();
      const Monomial& lj = g[j].leading_monomial();
      // strict divisibility, or equal leading monomials where the earlier one wins
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    // Leading terms are mutually indivisible, so reduction only touches the tail.
    minimal[i] = poly_reduce(minimal[i], others).monic();
  }

  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() > b.leading_monomial(); });
  return minimal;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, const BuchbergerOptions& options,
                                   BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  st = {};

  std::vector<Polynomial> g;
  for (auto& f : generators) {
    if (!f.is_zero()) g.push_back(f.monic());
  }
  if (g.empty()) return {};

  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    queue.insert(Pair{std::min(i, j), std::max(i, j), Monomial::lcm(g[i].leading_monomial(), g[j].leading_monomial())});
    pending.insert(key(i, j));
  };
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) enqueue(i, j);
  }

  while (!queue.empty()) {
    if (st.pairs_considered >= options.max_pairs) {
      throw ResourceExhausted("buchberger: pair budget of " + std::to_string(options.max_pairs) +
                              " exhausted with basis size " + std::to_string(g.size()) + " and " +
                              std::to_string(queue.size()) + " pairs still queued");
    }
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(key(pr.i, pr.j));
    ++st.pairs_considered;

    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    if (li.coprime(lj)) {
      ++st.skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading_monomial().divides(pr.lcm)) continue;
      if (!pending.contains(key(pr.i, k)) && !pending.contains(key(pr.j, k))) chain = true;
    }
    if (chain) {
      ++st.skipped_chain;
      continue;
    }

    Polynomial r = poly_reduce(s_polynomial(g[pr.i], g[pr.j]), g);
    if (r.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    g.push_back(r.monic());
    const std::size_t fresh = g.size() - 1;
    for (std::size_t i = 0; i < fresh; ++i) enqueue(i, fresh);
    st.basis_peak = std::max(st.basis_peak, g.size());
  }
  st.basis_peak = std::max(st.basis_peak, g.size());
  return inter_reduce(std::move(g));
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!poly_reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace factorlab
