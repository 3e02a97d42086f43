#include "factorlab/cli.hpp"

#include "factorlab/arith.hpp"
#include "factorlab/classical.hpp"
#include "factorlab/decomposition.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/mafpv.hpp"
#include "factorlab/rpv.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace factorlab::cli {

using namespace std::chrono_literals;

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> methods = {"trial", "fermat", "rho",         "p-1",           "ecm",
                                                   "triangular", "mdpv", "mafpv-brute", "mafpv-lattice", "auto"};
  return methods;
}

std::optional<long> timeout_from_env() {
  const char* raw = std::getenv("FACTORLAB_TIMEOUT_MS");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0) return std::nullopt;
  return v;
}

namespace {

constexpr std::uint64_t kRhoIterations = 50'000'000;
constexpr unsigned kRhoAttempts = 16;
constexpr unsigned long kPm1Bound = 1'000'000;

Deadline slice(const Deadline& overall, double fraction) {
  const auto left = overall.remaining();
  return Deadline::after(std::chrono::milliseconds(static_cast<long>(left.count() * fraction)));
}

FactorResult run_auto(const mpz_class& n, const RunOptions& o, const Deadline& deadline) {
  static const std::string kMethod = "auto";
  Stopwatch watch;
  auto finish = [&](FactorResult r) {
    if (r.ok()) r.reason = "via " + r.method;
    r.method = kMethod;
    return watch.stamp(std::move(r));
  };
  if (is_probable_prime(n)) return finish(FactorResult::failure(n, kMethod, "probable prime"));
  if (auto r = triangular_factor(n); r.ok()) return finish(std::move(r));
  if (auto r = trial_division(n, mpz_class(10'000), deadline); r.ok()) return finish(std::move(r));
  if (auto r = pollard_rho_restarting(n, o.seed, kRhoIterations, kRhoAttempts, slice(deadline, 0.5)); r.ok()) {
    return finish(std::move(r));
  }
  if (gcd(n, mpz_class(6)) == 1) {
    EcmOptions eo;
    eo.rng_seed = o.seed;
    eo.curve_count = 100'000;
    if (auto r = ecm_factor(n, eo, deadline); r.ok()) return finish(std::move(r));
  }
  const Status s = deadline.expired() ? Status::timeout : Status::failed;
  return finish(FactorResult::failure(n, kMethod, s == Status::timeout ? "deadline reached" : "all strategies failed", s));
}

FactorResult dispatch(const mpz_class& n, std::string_view method, const RunOptions& o, const Deadline& deadline) {
  if (method == "trial") return trial_division(n, std::nullopt, deadline);
  if (method == "fermat") return fermat_factor(n, std::numeric_limits<std::uint64_t>::max(), deadline);
  if (method == "rho") return pollard_rho_restarting(n, o.seed, kRhoIterations, kRhoAttempts, deadline);
  if (method == "p-1") return pollard_p_minus_1(n, kPm1Bound, deadline);
  if (method == "ecm") {
    EcmOptions eo;
    eo.rng_seed = o.seed;
    eo.curve_count = 100'000;
    return ecm_factor(n, eo, deadline);
  }
  if (method == "triangular") return triangular_factor(n);
  if (method == "mdpv") {
    MdpvOptions mo;
    mo.box = o.spec_box;
    return mdpv_factor(n, mo, deadline);
  }
  if (method == "mafpv-brute") return mafpv_brute_factor(n, deadline);
  if (method == "mafpv-lattice") return mafpv_lattice_factor(n, o.lattice_param, deadline);
  if (method == "auto") return run_auto(n, o, deadline);
  throw std::invalid_argument("unknown method '" + std::string(method) + "'");
}

}  // namespace

FactorResult run_method(const mpz_class& n, std::string_view method, const RunOptions& options) {
  if (std::find(known_methods().begin(), known_methods().end(), method) == known_methods().end()) {
    throw std::invalid_argument("unknown method '" + std::string(method) + "'");
  }
  Stopwatch watch;
  const Deadline deadline = Deadline::after(std::chrono::milliseconds(options.timeout_ms));
  FactorResult r;
  try {
    r = dispatch(n, method, options, deadline);
  } catch (const UnsupportedInput& e) {
    r = FactorResult::failure(n, std::string(method), e.what());
  } catch (const ResourceExhausted& e) {
    r = FactorResult::failure(n, std::string(method), e.what());
  } catch (const DomainError& e) {
    r = FactorResult::failure(n, std::string(method), e.what());
  }
  if (r.ok() && r.p * r.q != n) throw std::logic_error("run_method: factors do not multiply to n");
  if (!r.ok() && r.status != Status::timeout && deadline.expired()) r.status = Status::timeout;
  r.method = std::string(method);
  return watch.stamp(std::move(r));
}

BenchRecord to_record(const FactorResult& r, bool with_timing) {
  BenchRecord rec;
  rec.n = r.n.get_str();
  rec.method = r.method;
  rec.status = r.status;
  rec.reason = r.reason;
  if (r.ok()) {
    if (r.p * r.q != r.n) throw std::logic_error("to_record: factors do not multiply to n");
    rec.factors = {r.p.get_str(), r.q.get_str()};
  }
  rec.elapsed_ms = with_timing ? static_cast<std::int64_t>(std::llround(r.elapsed_ms)) : 0;
  return rec;
}

std::string to_json_line(const BenchRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["method"] = r.method;
  j["status"] = std::string(to_string(r.status));
  j["factors"] = r.factors;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

BenchRecord record_from_json(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  BenchRecord r;
  r.n = j.at("n").get<std::string>();
  r.method = j.at("method").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  if (status == "ok") {
    r.status = Status::ok;
  } else if (status == "failed") {
    r.status = Status::failed;
  } else if (status == "timeout") {
    r.status = Status::timeout;
  } else {
    throw std::invalid_argument("record_from_json: unknown status '" + status + "'");
  }
  r.factors = j.at("factors").get<std::vector<std::string>>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

std::string to_text_line(const BenchRecord& r) {
  std::string out = r.n;
  if (r.status == Status::ok) {
    out += " = " + r.factors.at(0) + " * " + r.factors.at(1);
  } else {
    out += ": " + std::string(to_string(r.status));
    if (!r.reason.empty()) out += " (" + r.reason + ")";
  }
  out += "  [" + r.method + ", " + std::to_string(r.elapsed_ms) + " ms]";
  return out;
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok:
      return 0;
    case Status::failed:
      return 1;
    case Status::timeout:
      return 3;
  }
  return 1;
}

std::vector<mpz_class> read_corpus(std::istream& in, std::ostream& diag) {
  std::vector<mpz_class> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    mpz_class v;
    if (token.find_first_not_of("0123456789") != std::string::npos || v.set_str(token, 10) != 0) {
      diag << "warning: line " << lineno << ": skipping malformed modulus '" << token << "'\n";
      continue;
    }
    if (v < 4) {
      diag << "warning: line " << lineno << ": skipping modulus below 4\n";
      continue;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<BenchRecord> run_bench(const std::vector<mpz_class>& corpus, const std::vector<std::string>& methods,
                                   const RunOptions& options, unsigned threads, bool with_timing) {
  const std::size_t cells = corpus.size() * methods.size();
  std::vector<BenchRecord> records(cells);
  if (cells == 0) return records;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      const auto& n = corpus[i / methods.size()];
      const auto& m = methods[i % methods.size()];
      records[i] = to_record(run_method(n, m, options), with_timing);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return records;
}

std::vector<MethodSummary> summarize(const std::vector<BenchRecord>& records, const std::vector<std::string>& methods) {
  std::vector<MethodSummary> rows;
  for (const auto& m : methods) {
    MethodSummary s;
    s.method = m;
    std::vector<std::int64_t> times;
    for (const auto& r : records) {
      if (r.method != m) continue;
      ++s.total;
      if (r.status == Status::ok) ++s.ok;
      times.push_back(r.elapsed_ms);
    }
    if (!times.empty()) {
      std::sort(times.begin(), times.end());
      const std::size_t mid = times.size() / 2;
      s.median_ms = times.size() % 2 ? static_cast<double>(times[mid]) : (times[mid - 1] + times[mid]) / 2.0;
    }
    rows.push_back(std::move(s));
  }
  return rows;
}

std::string format_summary(const std::vector<MethodSummary>& rows) {
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-14s %10s %12s\n", "method", "ok/total", "median_ms");
  out << buf;
  for (const auto& r : rows) {
    const std::string ratio = std::to_string(r.ok) + "/" + std::to_string(r.total);
    std::snprintf(buf, sizeof buf, "%-14s %10s %12.1f\n", r.method.c_str(), ratio.c_str(), r.median_ms);
    out << buf;
  }
  return out.str();
}

}  // namespace factorlab::cli
