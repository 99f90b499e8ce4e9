// Command-line front end: single-curve queries, batch certification of rank
// tables and the congruence-obstruction suite.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecrank/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and rank >= 2 certificates for y^2 = x^3 - m^2 x + p^2 q^2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ecrank::tool_version()));

  bool as_json = false;
  app.add_flag("--json", as_json, "Print the machine-readable report");

  std::int64_t m = 0, p = 0, q = 0;
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Positive integer m")->required();
    sub->add_option("--p", p, "Odd prime p")->required();
    sub->add_option("--q", q, "Odd prime q, distinct from p")->required();
  };

  std::vector<std::uint64_t> primes;
  bool no_timings = false;
  auto add_certify_flags = [&](CLI::App* sub) {
    sub->add_option("--primes", primes, "Primes for the torsion bound (default: first 5 good primes >= 5)")
        ->delimiter(',');
    sub->add_flag("--no-timings", no_timings, "Report 0 ms for every row (byte-stable output)");
  };

  auto* info = app.add_subcommand("info", "Curve, discriminant, hypothesis flags and marked points");
  add_family(info);

  std::string a = "0", b = "0";
  std::uint64_t prime = 0;
  auto* count = app.add_subcommand("count", "Count points of y^2 = x^3 + ax + b over F_prime");
  count->add_option("--a", a, "Coefficient a")->required();
  count->add_option("--b", b, "Coefficient b")->required();
  count->add_option("--prime", prime, "Odd prime of good reduction")->required();

  auto* torsion = app.add_subcommand("torsion", "Rational torsion subgroup of C_m");
  add_family(torsion);
  torsion->add_option("--primes", primes, "Primes for the torsion bound")->delimiter(',');

  auto* rank_lb = app.add_subcommand("rank-lb", "Certify rank >= 2 for one family member");
  add_family(rank_lb);
  add_certify_flags(rank_lb);

  std::string input, output;
  unsigned workers = 0;
  auto* table = app.add_subcommand("table", "Certify every row of an m,pq,claimed_rank CSV");
  table->add_option("--input", input, "CSV file with header m,pq,claimed_rank")->required();
  table->add_option("--output", output, "Where to write the JSON report");
  table->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");
  add_certify_flags(table);

  bool list = false, inject_mutant = false;
  auto* lemmas = app.add_subcommand("verify-lemmas", "Run the congruence-obstruction corpus");
  lemmas->add_flag("--list", list, "Print the corpus without running it");
  lemmas->add_flag("--inject-mutant", inject_mutant, "Append a perturbed spec (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ecrank::exit_status::kInputError;
  }

  ecrank::CertifyOptions options;
  options.primes = primes;
  options.timings = !no_timings;
  options.workers = workers;

  ecrank::CommandOutput out;
  if (*info) {
    out = ecrank::cmd_info(m, p, q);
  } else if (*count) {
    out = ecrank::cmd_count(a, b, prime);
  } else if (*torsion) {
    out = ecrank::cmd_torsion(m, p, q, primes);
  } else if (*rank_lb) {
    out = ecrank::cmd_rank_lb(m, p, q, options);
  } else if (*table) {
    out = ecrank::cmd_table(input, output, options);
  } else if (*lemmas) {
    out = ecrank::cmd_verify_lemmas(list, inject_mutant);
  }

  if (as_json) {
    std::cout << out.json.dump(2) << "\n";
  } else if (out.exit_code == ecrank::exit_status::kInputError) {
    std::cerr << out.text;
  } else {
    std::cout << out.text;
  }
  return out.exit_code;
}
