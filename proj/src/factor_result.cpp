#include "factorlab/factor_result.hpp"

#include <stdexcept>

namespace factorlab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::failed: return "failed";
    case Status::timeout: return "timeout";
  }
  return "failed";
}

FactorResult FactorResult::success(const mpz_class& n, const mpz_class& factor, std::string method) {
  mpz_class f = abs(factor);
  if (f <= 1 || f >= n || !mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
    throw std::logic_error(method + ": " + f.get_str() + " is not a nontrivial divisor of " + n.get_str());
  }
  FactorResult r;
  r.n = n;
  r.p = f;
  r.q = n / f;
  if (r.p > r.q) swap(r.p, r.q);
  r.method = std::move(method);
  r.status = Status::ok;
  return r;
}

FactorResult FactorResult::failure(const mpz_class& n, std::string method, std::string reason, Status status) {
  FactorResult r;
  r.n = n;
  r.method = std::move(method);
  r.status = status;
  r.reason = std::move(reason);
  return r;
}

std::chrono::milliseconds Deadline::remaining() const {
  if (!at_) return std::chrono::milliseconds::max();
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*at_ - Clock::now());
  return left.count() > 0 ? left : std::chrono::milliseconds(0);
}

}  // namespace factorlab
