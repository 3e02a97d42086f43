#include "factorlab/arith.hpp"
#include "factorlab/classical.hpp"
#include "factorlab/errors.hpp"

namespace factorlab {

InversionFailure::InversionFailure(mpz_class divisor, mpz_class element)
    : std::runtime_error("element " + element.get_str() + " is not invertible; gcd with modulus " + divisor.get_str()),
      divisor_(std::move(divisor)),
      element_(std::move(element)) {}

SingularCurve::SingularCurve(mpz_class divisor)
    : std::invalid_argument("4a^3 + 27b^2 is not invertible modulo n; gcd " + divisor.get_str()),
      divisor_(std::move(divisor)) {}

AffineCurve::AffineCurve(mpz_class a, mpz_class b, mpz_class n) : n_(std::move(n)) {
  if (n_ < 2) throw DomainError("AffineCurve: modulus must be >= 2");
  a_ = reduce(a);
  b_ = reduce(b);
  mpz_class disc = reduce(4 * a_ * a_ * a_ + 27 * b_ * b_);
  mpz_class g = gcd(disc, n_);
  if (g != 1) throw SingularCurve(g);
}

mpz_class AffineCurve::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t());
  return r;
}

mpz_class AffineCurve::inverse(const mpz_class& v) const {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t()) == 0) {
    throw InversionFailure(gcd(v, n_), v);
  }
  return inv;
}

bool AffineCurve::contains(const AffinePoint& p) const {
  if (p.infinity) return true;
  return reduce(p.y * p.y - (p.x * p.x * p.x + a_ * p.x + b_)) == 0;
}

AffinePoint AffineCurve::negate(const AffinePoint& p) const {
  if (p.infinity) return p;
  return AffinePoint{p.x, reduce(-p.y), false};
}

AffinePoint AffineCurve::add(const AffinePoint& p, const AffinePoint& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (reduce(p.x - q.x) == 0) {
    mpz_class s = reduce(p.y + q.y);
    if (s == 0) return AffinePoint::at_infinity();
    if (reduce(p.y - q.y) == 0) return dbl(p);
    // Same x, y neither equal nor opposite: only possible modulo a composite.
    throw InversionFailure(gcd(s, n_), s);
  }
  const mpz_class slope = reduce((p.y - q.y) * inverse(reduce(p.x - q.x)));
  mpz_class x3 = reduce(slope * slope - p.x - q.x);
  mpz_class y3 = reduce(-p.y + slope * (p.x - x3));
  return AffinePoint{std::move(x3), std::move(y3), false};
}

AffinePoint AffineCurve::dbl(const AffinePoint& p) const {
  if (p.infinity) return p;
  if (reduce(p.y) == 0) return AffinePoint::at_infinity();
  const mpz_class slope = reduce((3 * p.x * p.x + a_) * inverse(reduce(2 * p.y)));
  mpz_class x3 = reduce(slope * slope - 2 * p.x);
  mpz_class y3 = reduce(-p.y + slope * (p.x - x3));
  return AffinePoint{std::move(x3), std::move(y3), false};
}

AffinePoint AffineCurve::multiply(const mpz_class& k, const AffinePoint& p) const {
  if (sgn(k) < 0) throw DomainError("AffineCurve::multiply: negative scalar");
  AffinePoint acc = AffinePoint::at_infinity();
  for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = dbl(acc);
    if (mpz_tstbit(k.get_mpz_t(), bit)) acc = add(acc, p);
  }
  return acc;
}

namespace {

std::optional<mpz_class> stage1_with_primes(const AffineCurve& curve, AffinePoint point,
                                            const std::vector<unsigned long>& primes, unsigned long bound) {
  try {
    for (unsigned long q : primes) {
      if (q > bound) break;
      unsigned long qe = q;
      while (qe <= bound / q) qe *= q;
      point = curve.multiply(qe, point);
      if (point.infinity) return std::nullopt;
    }
  } catch (const InversionFailure& failure) {
    return failure.divisor();
  }
  return std::nullopt;
}

}  // namespace

std::optional<mpz_class> ecm_stage1(const AffineCurve& curve, const AffinePoint& start, unsigned long stage1_bound) {
  return stage1_with_primes(curve, start, primes_up_to(stage1_bound), stage1_bound);
}

FactorResult ecm_factor(const mpz_class& n, const EcmOptions& options, const Deadline& deadline) {
  static const std::string kMethod = "ecm";
  Stopwatch watch;
  if (n < 4 || gcd(n, mpz_class(6)) != 1) {
    throw UnsupportedInput("ecm_factor: requires gcd(n, 6) = 1 and n >= 4, got " + n.get_str());
  }
  if (is_probable_prime(n)) return watch.stamp(FactorResult::failure(n, kMethod, "prime input"));

  const auto primes = primes_up_to(options.stage1_bound);
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(options.rng_seed);

  auto extract = [&](const mpz_class& g) -> std::optional<FactorResult> {
    if (g <= 1 || g >= n) return std::nullopt;
    if (!mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t())) {
      throw std::logic_error("ecm_factor: inversion witness " + g.get_str() + " does not divide n");
    }
    return FactorResult::success(n, g, kMethod);
  };

  for (unsigned c = 0; c < options.curve_count; ++c) {
    if (deadline.expired()) {
      return watch.stamp(FactorResult::failure(n, kMethod, "deadline reached", Status::timeout));
    }
    // Pick the point and a, then solve for b so the point lies on the curve.
    mpz_class x = rng.get_z_range(n);
    mpz_class y = rng.get_z_range(n);
    mpz_class a = rng.get_z_range(n);
    mpz_class b = y * y - x * x * x - a * x;
    std::optional<mpz_class> witness;
    try {
      AffineCurve curve(a, b, n);
      witness = stage1_with_primes(curve, AffinePoint{x, y, false}, primes, options.stage1_bound);
    } catch (const SingularCurve& singular) {
      witness = singular.divisor();
    }
    if (witness) {
      if (auto found = extract(*witness)) return watch.stamp(std::move(*found));
    }
  }
  return watch.stamp(FactorResult::failure(n, kMethod, "curves exhausted"));
}

}  // namespace factorlab
