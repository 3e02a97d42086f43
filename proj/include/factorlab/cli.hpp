#pragma once

// Method dispatch, records and the benchmark harness behind the factorlab tool.

#include "factorlab/factor_result.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factorlab::cli {

inline constexpr long kDefaultTimeoutMs = 10'000;

const std::vector<std::string>& known_methods();

struct RunOptions {
  long timeout_ms = kDefaultTimeoutMs;
  std::uint64_t seed = 1;
  unsigned lattice_param = 2;
  int spec_box = 3;
};

/// FACTORLAB_TIMEOUT_MS when set to a positive integer.
std::optional<long> timeout_from_env();

/// Runs one method under options.timeout_ms. Input the method cannot take
/// (even n for ECM, say) comes back as failed with the error as reason.
/// Throws std::invalid_argument for an unknown method.
FactorResult run_method(const mpz_class& n, std::string_view method, const RunOptions& options);

struct BenchRecord {
  std::string n;
  std::string method;
  Status status = Status::failed;
  std::vector<std::string> factors;
  std::int64_t elapsed_ms = 0;
  std::string reason;  // not serialized
};

/// Throws std::logic_error if an ok result's factors do not multiply to n.
BenchRecord to_record(const FactorResult& r, bool with_timing = true);

/// {"n", "method", "status", "factors", "elapsed_ms"} on one line.
std::string to_json_line(const BenchRecord& r);
BenchRecord record_from_json(std::string_view line);

std::string to_text_line(const BenchRecord& r);

/// 0 ok, 1 failed, 3 timeout.
int exit_code(Status s);
inline constexpr int kUsageError = 2;

/// Decimal moduli, one per line, '#' starts a comment. Malformed lines are
/// reported on `diag` and skipped.
std::vector<mpz_class> read_corpus(std::istream& in, std::ostream& diag);

/// Every (modulus, method) cell, in input order times method order. Cells
/// run on up to `threads` workers (0 picks the hardware concurrency).
std::vector<BenchRecord> run_bench(const std::vector<mpz_class>& corpus, const std::vector<std::string>& methods,
                                   const RunOptions& options, unsigned threads = 0, bool with_timing = true);

struct MethodSummary {
  std::string method;
  std::size_t ok = 0;
  std::size_t total = 0;
  double median_ms = 0.0;
};

std::vector<MethodSummary> summarize(const std::vector<BenchRecord>& records, const std::vector<std::string>& methods);
std::string format_summary(const std::vector<MethodSummary>& rows);

}  // namespace factorlab::cli
