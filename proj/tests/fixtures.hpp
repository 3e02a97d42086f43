#pragma once

#include "factorlab/arith.hpp"
#include "factorlab/decomposition.hpp"
#include "factorlab/rpv.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

inline mpz_class Z(const char* s) { return mpz_class(s, 10); }

struct TriangularCase {
  mpz_class n;
  mpz_class factor;
};

// n = k(k+1)/2 semiprimes with the divisor the square-root test picks.
inline std::vector<TriangularCase> triangular_cases() {
  return {{Z("15"), Z("5")},
          {Z("25651"), Z("227")},
          {Z("16744225501"), Z("182999")},
          {Z("22008842474653"), Z("6634583")},
          {Z("21997001338003"), Z("6632797")}};
}

struct SixKCase {
  const char* label;
  mpz_class p;
  mpz_class x;
  int sign;
};

inline std::vector<SixKCase> sixk_cases() {
  return {
      {"100-bit", Z("570303428823043591555786898897"), Z("95050571470507265259297816483"), -1},
      {"233-bit", Z("6833702715893496540959299291382359232559264092523368475576074466071807"),
       Z("1138950452648916090159883215230393205426544015420561412596012411011968"), -1},
      {"333-bit",
       Z("6358337399459401417678277930704848782199223004051687909162273047126596686480950628594226066122559163"),
       Z("1059722899909900236279712988450808130366537167341947984860378841187766114413491771432371011020426527"), 1},
      {"1000-bit",
       Z("6580891898403017304504964295192387926609876136973547966448460332446212362576520460217404849217595041225"
         "5594069187130625863542876290710894795685423971293613093855424554284396979582824421642925622879303404140"
         "5027874070693186794739605844025450561774421858331525104830589953173100274244230949509794254643"),
       Z("1096815316400502884084160715865397987768312689495591327741410055407702060429420076702900808202932506870"
         "9265678197855104310590479381785149132614237328548935515642570759047399496597137403607154270479883900690"
         "0837979011782197799123267640670908426962403643055254184138431658862183379040705158251632375774"),
       -1},
  };
}

struct RectangleCase {
  factorlab::RectangleWitness witness;
  mpz_class p;
  mpz_class q;
  mpz_class n;
};

inline std::vector<RectangleCase> rectangle_cases() {
  return {
      {{Z("31184864858157931962611989461653189383"), Z("56155612513944961522154793570341370125"), 1, 1},
       Z("187109189148947591775671936769919136299"),
       Z("336933675083669769132928761422048220751"),
       Z("63043386741880417138118865611486603010519216638181159430642741072139609140549")},
      {{Z("42575376056348197982869887629770563187"), Z("33263421842796264531163131543015665831"), -1, 1},
       Z("255452256338089187897219325778623379121"),
       Z("199580531056777587186978789258093994987"),
       Z("50983296979607918402232120345297544075216780739063868280880006751616374466427")},
  };
}

// Determinant-n matrix and the specialization (x3, x4, y3, y4) = (1, 2, 1, 2).
struct WorkedExample {
  factorlab::Matrix2 N{Z("98297604265312920805982784738341591889580784184957701040844308085531017447603"),
                       Z("98297604265312920805982784738341591890174115698218506161959832718260667360288"),
                       Z("331341255498442310683613277890542765532"), Z("331341255498442310683613277890542765535")};
  mpz_class n = Z("98297604265312920805982784738341591888656111416198453609045170174910824769389");
  mpz_class x1 = Z("296665756630402560557762316364824956342");
  mpz_class x2 = Z("296665756630402560557762316364824956343");
  mpz_class y1 = Z("331341255498442310683613277890542765530");
  mpz_class y2 = Z("331341255498442310683613277890542765531");
  mpz_class p = Z("296665756630402560557762316364824956341");
  mpz_class q = Z("331341255498442310683613277890542765529");

  factorlab::Specialization specialization() const {
    factorlab::Specialization s;
    s[factorlab::x3] = 1;
    s[factorlab::x4] = 2;
    s[factorlab::y3] = 1;
    s[factorlab::y4] = 2;
    return s;
  }
};

// The fifteen polynomials of the published lex basis, in a, b, c, d, n.
inline const std::vector<std::string>& published_basis() {
  static const std::vector<std::string> b = {
      "a*x3 - c*x1 + x1*x4*y3 - x2*x3*y3",
      "b*x3 - d*x1 + x1*x4*y4 - x2*x3*y4",
      "-a + x1*y1 + x2*y3",
      "-b + x1*y2 + x2*y4",
      "a^2*x3*y4 - a*b*x3*y3 - a*c*x1*y4 + b*c*x1*y3 + n*x1*y3",
      "a*x3*y4 - b*x3*y3 - c*x1*y4 + d*x1*y3",
      "a*y2 - b*y1 + x2*y1*y4 - x2*y2*y3",
      "a^2*x4*y2 - a*b*x4*y1 - a*c*x2*y2 + b*c*x2*y1 + n*x2*y1",
      "a*x4*y2 - b*x4*y1 - c*x2*y2 + d*x2*y1",
      "a^2*x4*y4 - a*b*x4*y3 - a*c*x2*y4 - a*n + b*c*x2*y3 + n*x2*y3",
      "a*x4*y4 - b*x4*y3 - c*x2*y4 + d*x2*y3 - n",
      "-c + x3*y1 + x4*y3",
      "-d + x3*y2 + x4*y4",
      "c*y2 - d*y1 + x4*y1*y4 - x4*y2*y3",
      "a*d - b*c - n",
  };
  return b;
}

// Eratosthenes, the oracle for primality and smallest factors.
inline std::vector<std::uint32_t> smallest_factor_table(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  return spf;
}

inline mpz_class random_prime_bits(std::mt19937_64& rng, unsigned bits) {
  mpz_class lo = mpz_class(1) << (bits - 1);
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << (bits - 1)) - 1);
  return factorlab::next_prime(lo + mpz_class(std::to_string(dist(rng))));
}

struct Semiprime {
  mpz_class n;
  mpz_class p;
  mpz_class q;
};

// p, q distinct primes of exactly `bits` bits, p < q.
inline std::vector<Semiprime> semiprime_corpus(std::size_t count, unsigned bits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Semiprime> out;
  while (out.size() < count) {
    mpz_class p = random_prime_bits(rng, bits);
    mpz_class q = random_prime_bits(rng, bits);
    if (mpz_sizeinbase(p.get_mpz_t(), 2) != bits || mpz_sizeinbase(q.get_mpz_t(), 2) != bits || p == q) continue;
    if (p > q) std::swap(p, q);
    out.push_back({p * q, p, q});
  }
  return out;
}

}  // namespace fixtures
