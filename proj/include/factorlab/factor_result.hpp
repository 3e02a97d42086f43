#pragma once

#include <gmpxx.h>

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace factorlab {

enum class Status { ok, failed, timeout };

std::string_view to_string(Status s);

/// Outcome of one factoring attempt. When ok: p * q == n and 1 < p <= q < n.
struct FactorResult {
  mpz_class n;
  mpz_class p;
  mpz_class q;
  std::string method;
  double elapsed_ms = 0.0;
  Status status = Status::failed;
  std::string reason;

  bool ok() const { return status == Status::ok; }

  /// Builds an ok result from one nontrivial divisor of n; orders the pair.
  /// Throws std::logic_error if `factor` does not split n nontrivially.
  static FactorResult success(const mpz_class& n, const mpz_class& factor, std::string method);
  static FactorResult failure(const mpz_class& n, std::string method, std::string reason,
                              Status status = Status::failed);
};

/// Cooperative time limit. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) { return Deadline(Clock::now() + budget); }

  bool bounded() const { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }
  std::chrono::milliseconds remaining() const;

 private:
  explicit Deadline(Clock::time_point at) : at_(at) {}
  std::optional<Clock::time_point> at_;
};

/// Wall-clock stopwatch used to stamp FactorResult::elapsed_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  FactorResult stamp(FactorResult r) const {
    r.elapsed_ms = elapsed_ms();
    return r;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace factorlab
