#include "factorlab/polynomial.hpp"

#include "factorlab/errors.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace factorlab {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t v, std::uint32_t power) {
  Monomial m;
  m.exp_.at(v) = power;
  return m;
}

std::uint32_t Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), std::uint32_t{0}); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exp_[i] = exp_[i] + other.exp_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (divisor.exp_[i] > exp_[i]) throw DomainError("Monomial division is not exact");
    r.exp_[i] = exp_[i] - divisor.exp_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return r;
}

std::string Monomial::to_string(const VariableNames& names) const {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i].empty() ? "v" + std::to_string(i) : std::string(names[i]);
    if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

// ---- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(const mpq_class& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t v) { return term(1, Monomial::variable(v)); }

Polynomial Polynomial::term(const mpq_class& coefficient, const Monomial& monomial) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(monomial, coefficient);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

const mpq_class& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  const mpq_class inv = 1 / leading_coefficient();
  r *= inv;
  return r;
}

mpq_class Polynomial::evaluate(std::span<const mpq_class, kNumVars> point) const {
  mpq_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::subtract_multiple(const mpq_class& coefficient, const Monomial& monomial, const Polynomial& g) {
  for (const auto& [m, c] : g.terms_) add_term(m * monomial, -(coefficient * c));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1L);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string Polynomial::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class mag = abs(c);
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string(names);
    }
  }
  return out;
}

// ---- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, mpz_class, std::less<>>& constants,
         const VariableNames& names)
      : text_(text), constants_(constants), names_(names) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_polynomial: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const mpz_class e = integer();
      if (!e.fits_uint_p() || e > 64) fail("exponent out of range");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (accept('/')) {
        const mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        value /= mpq_class(den);
      }
      return Polynomial(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t v = 0; v < kNumVars; ++v) {
        if (!names_[v].empty() && names_[v] == ident) return Polynomial::variable(v);
      }
      if (auto it = constants_.find(ident); it != constants_.end()) return Polynomial(it->second);
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::map<std::string, mpz_class, std::less<>>& constants_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::map<std::string, mpz_class, std::less<>>& constants,
                            const VariableNames& names) {
  return Parser(text, constants, names).parse();
}

}  // namespace factorlab
