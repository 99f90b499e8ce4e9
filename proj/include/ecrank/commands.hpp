#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecrank/report.hpp"

namespace ecrank {

namespace exit_status {
inline constexpr int kSuccess = 0;
inline constexpr int kCertificationFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBatchParseError = 3;
}  // namespace exit_status

/// What a subcommand produced: the process exit code, a machine-readable
/// document and the human-readable rendering.
struct CommandOutput {
  int exit_code = exit_status::kSuccess;
  nlohmann::json json;
  std::string text;
};

CommandOutput cmd_info(std::int64_t m, std::int64_t p, std::int64_t q);

/// a and b are decimal integers of any size.
CommandOutput cmd_count(const std::string& a, const std::string& b, std::uint64_t prime);

/// An empty prime list selects the curve's default primes.
CommandOutput cmd_torsion(std::int64_t m, std::int64_t p, std::int64_t q,
                          const std::vector<std::uint64_t>& primes);

CommandOutput cmd_rank_lb(std::int64_t m, std::int64_t p, std::int64_t q,
                          const CertifyOptions& options);

/// Writes the JSON report to output_path unless it is empty.
CommandOutput cmd_table(const std::string& input_path, const std::string& output_path,
                        const CertifyOptions& options);

/// inject_mutant appends a perturbed copy of the first non-doubleness spec.
CommandOutput cmd_verify_lemmas(bool list_only, bool inject_mutant);

}  // namespace ecrank
