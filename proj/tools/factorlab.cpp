#include "factorlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace fc = factorlab::cli;

namespace {

std::vector<std::string> split_methods(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_modulus(const std::string& text, mpz_class& n) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return false;
  return n.set_str(text, 10) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorlab: integer factorization toolkit"};
  app.require_subcommand(1);

  fc::RunOptions options;
  options.timeout_ms = fc::timeout_from_env().value_or(fc::kDefaultTimeoutMs);
  bool json = false;
  bool no_timing = false;

  auto* factor = app.add_subcommand("factor", "Factor one modulus");
  std::string n_text;
  std::string method = "auto";
  factor->add_option("n", n_text, "Modulus (decimal, >= 4)")->required();
  factor->add_option("--method,-m", method, "Method")->check(CLI::IsMember(fc::known_methods()));
  factor->add_flag("--json", json, "Emit one JSON record");
  factor->add_option("--timeout-ms", options.timeout_ms, "Per-run timeout")->check(CLI::PositiveNumber);
  factor->add_option("--seed", options.seed, "Seed for stochastic methods");
  factor->add_option("--lattice-param", options.lattice_param, "Shift degree for mafpv-lattice")
      ->check(CLI::Range(1u, 6u));
  factor->add_option("--spec-box", options.spec_box, "Specialization box B for mdpv")->check(CLI::Range(1, 20));
  factor->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0");

  auto* bench = app.add_subcommand("bench", "Run methods over a corpus of moduli");
  std::string input;
  std::string methods_text = "rho,ecm";
  unsigned threads = 0;
  bench->add_option("--input,-i", input, "Corpus file, one modulus per line")->required();
  bench->add_option("--methods", methods_text, "Comma separated methods");
  bench->add_flag("--json", json, "Emit JSON lines");
  bench->add_option("--timeout-ms", options.timeout_ms, "Per-run timeout")->check(CLI::PositiveNumber);
  bench->add_option("--seed", options.seed, "Seed for stochastic methods");
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)");
  bench->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : fc::kUsageError;
  }

  if (factor->parsed()) {
    mpz_class n;
    if (!parse_modulus(n_text, n) || n < 4) {
      std::cerr << "factorlab: n must be a decimal integer >= 4, got '" << n_text << "'\n";
      return fc::kUsageError;
    }
    const auto result = fc::run_method(n, method, options);
    const auto record = fc::to_record(result, !no_timing);
    if (json) {
      std::cout << fc::to_json_line(record) << '\n';
      if (!result.ok() && !result.reason.empty()) std::cerr << "factorlab: " << result.reason << '\n';
    } else {
      std::cout << fc::to_text_line(record) << '\n';
    }
    return fc::exit_code(result.status);
  }

  const auto methods = split_methods(methods_text);
  for (const auto& m : methods) {
    if (std::find(fc::known_methods().begin(), fc::known_methods().end(), m) == fc::known_methods().end()) {
      std::cerr << "factorlab: unknown method '" << m << "'\n";
      return fc::kUsageError;
    }
  }
  std::ifstream in(input);
  if (!in) {
    std::cerr << "factorlab: cannot read '" << input << "'\n";
    return fc::kUsageError;
  }
  const auto corpus = fc::read_corpus(in, std::cerr);
  const auto records = fc::run_bench(corpus, methods, options, threads, !no_timing);
  for (const auto& r : records) std::cout << (json ? fc::to_json_line(r) : fc::to_text_line(r)) << '\n';
  if (!records.empty()) (json ? std::cerr : std::cout) << fc::format_summary(fc::summarize(records, methods));
  return 0;
}
