#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecrank/family.hpp"
#include "ecrank/two_descent.hpp"

namespace ecrank {

inline constexpr int kSchemaVersion = 1;

std::string_view tool_version();

/// One (m, pq) entry of a rank table. p < q after factoring.
struct TableRow {
  std::uint64_t m = 0;
  std::uint64_t pq = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  int claimed_rank = 0;
  int line = 0;
  int occurrences = 1;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct LineError {
  int line = 0;
  std::string message;

  friend bool operator==(const LineError&, const LineError&) = default;
};

struct TableInput {
  std::vector<TableRow> rows;
  std::vector<LineError> errors;
};

/// (p, q) with p < q when n = p*q for distinct odd primes; trial division.
std::optional<std::pair<std::uint64_t, std::uint64_t>> split_two_odd_primes(std::uint64_t n);

/// CSV with the header `m,pq,claimed_rank`. Repeated (m, pq) tuples are
/// folded into their first occurrence.
TableInput parse_table_csv(std::istream& in);

enum class RowStatus { CertifiedLb2, HypothesesUnmet, Failed };

std::string_view to_string(RowStatus s);
RowStatus row_status_from_string(std::string_view s);

struct RowReport {
  TableRow row;
  FamilyFlags flags;
  RowStatus status = RowStatus::Failed;
  std::optional<RankCertificate> certificate;
  std::string failure;
  std::int64_t millis = 0;

  friend bool operator==(const RowReport&, const RowReport&) = default;
};

struct Report {
  int schema = kSchemaVersion;
  std::string version;
  nlohmann::json input;
  std::vector<RowReport> rows;
  std::vector<LineError> errors;

  friend bool operator==(const Report&, const Report&) = default;
};

struct CertifyOptions {
  /// Empty means the default prime set of each curve.
  std::vector<std::uint64_t> primes;
  /// 0 means hardware concurrency.
  unsigned workers = 0;
  bool timings = true;
};

RowReport certify_row(const TableRow& row, const CertifyOptions& options);

/// Rows are certified on a bounded worker pool; output keeps input order.
Report certify_table(const TableInput& input, const CertifyOptions& options, nlohmann::json echo);

/// 3 if any input line was rejected, else 0 iff every row is certified_lb2, else 1.
int exit_code(const Report& report);

nlohmann::json point_to_json(const PointQ& p);
PointQ point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankCertificate& cert);
RankCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

}  // namespace ecrank
