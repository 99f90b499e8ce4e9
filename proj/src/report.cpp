#include "ecrank/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <istream>
#include <map>
#include <thread>

#include "ecrank/error.hpp"
#include "ecrank/primes.hpp"

#ifndef ECRANK_VERSION
#define ECRANK_VERSION "0.0.0"
#endif

namespace ecrank {

using nlohmann::json;

std::string_view tool_version() { return ECRANK_VERSION; }

std::optional<std::pair<std::uint64_t, std::uint64_t>> split_two_odd_primes(std::uint64_t n) {
  if (n % 2 == 0) return std::nullopt;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    if (d != e && is_prime(d) && is_prime(e)) return std::make_pair(d, e);
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
bool parse_int(const std::string& s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

TableInput parse_table_csv(std::istream& in) {
  TableInput out;
  std::string line;
  int number = 0;
  bool header_seen = false;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> seen;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (!header_seen) {
      const auto fields = split_fields(text);
      if (fields != std::vector<std::string>{"m", "pq", "claimed_rank"}) {
        out.errors.push_back({number, "expected header m,pq,claimed_rank"});
        return out;
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_fields(text);
    if (fields.size() != 3) {
      out.errors.push_back({number, "expected 3 fields, got " + std::to_string(fields.size())});
      continue;
    }
    TableRow row;
    row.line = number;
    if (!parse_int(fields[0], row.m) || row.m == 0) {
      out.errors.push_back({number, "m must be a positive integer: '" + fields[0] + "'"});
      continue;
    }
    if (!parse_int(fields[1], row.pq) || row.pq == 0) {
      out.errors.push_back({number, "pq must be a positive integer: '" + fields[1] + "'"});
      continue;
    }
    if (!parse_int(fields[2], row.claimed_rank) || row.claimed_rank < 0) {
      out.errors.push_back({number, "claimed_rank must be a nonnegative integer: '" + fields[2] + "'"});
      continue;
    }
    const auto pq = split_two_odd_primes(row.pq);
    if (!pq) {
      out.errors.push_back(
          {number, std::to_string(row.pq) + " is not a product of two distinct odd primes"});
      continue;
    }
    std::tie(row.p, row.q) = *pq;
    const auto key = std::make_pair(row.m, row.pq);
    if (auto it = seen.find(key); it != seen.end()) {
      ++out.rows[it->second].occurrences;
      continue;
    }
    seen.emplace(key, out.rows.size());
    out.rows.push_back(row);
  }
  if (!header_seen && out.errors.empty()) out.errors.push_back({number, "missing header"});
  return out;
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::CertifiedLb2: return "certified_lb2";
    case RowStatus::HypothesesUnmet: return "hypotheses_unmet";
    case RowStatus::Failed: return "failed";
  }
  return "failed";
}

RowStatus row_status_from_string(std::string_view s) {
  if (s == "certified_lb2") return RowStatus::CertifiedLb2;
  if (s == "hypotheses_unmet") return RowStatus::HypothesesUnmet;
  if (s == "failed") return RowStatus::Failed;
  throw Error(Errc::InvalidArgument, "unknown row status '" + std::string(s) + "'");
}

RowReport certify_row(const TableRow& row, const CertifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RowReport out;
  out.row = row;
  out.flags = compute_flags(row.m, row.p, row.q);
  try {
    const Family family = make_family(static_cast<std::int64_t>(row.m),
                                      static_cast<std::int64_t>(row.p),
                                      static_cast<std::int64_t>(row.q));
    const std::vector<std::uint64_t> primes =
        options.primes.empty() ? default_primes(family.curve) : options.primes;
    out.certificate = rank2_certificate(family.params, primes);
    if (!out.certificate->hypotheses_met) {
      out.status = RowStatus::HypothesesUnmet;
    } else if (out.certificate->rank_lower_bound == 2) {
      out.status = RowStatus::CertifiedLb2;
    } else {
      out.status = RowStatus::Failed;
      out.failure = "rank lower bound " + std::to_string(out.certificate->rank_lower_bound);
    }
  } catch (const Error& e) {
    out.status = RowStatus::Failed;
    out.failure = e.what();
  }
  if (options.timings) {
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  }
  return out;
}

Report certify_table(const TableInput& input, const CertifyOptions& options, json echo) {
  Report report;
  report.version = std::string(tool_version());
  report.input = std::move(echo);
  report.errors = input.errors;
  report.rows.resize(input.rows.size());

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, std::max<std::size_t>(1, input.rows.size()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < input.rows.size(); i = next++) {
          report.rows[i] = certify_row(input.rows[i], options);
        }
      });
    }
  }
  return report;
}

int exit_code(const Report& report) {
  if (!report.errors.empty()) return 3;
  const bool all = std::all_of(report.rows.begin(), report.rows.end(), [](const RowReport& r) {
    return r.status == RowStatus::CertifiedLb2;
  });
  return all ? 0 : 1;
}

// Big integers and rationals are carried as decimal strings.

json point_to_json(const PointQ& p) {
  if (p.is_identity()) return "O";
  return json{{"x", p.x().get_str()}, {"y", p.y().get_str()}};
}

PointQ point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return PointQ::identity();
  return PointQ(mpq_class(j.at("x").get<std::string>(), 10), mpq_class(j.at("y").get<std::string>(), 10));
}

namespace {

json flags_to_json(const FamilyFlags& f) {
  return json{{"m_not_0_mod_4", f.m_not_0_mod_4},
              {"m_2_mod_64", f.m_2_mod_64},
              {"p_ne_q", f.p_ne_q},
              {"p_ndiv_m", f.p_ndiv_m},
              {"q_ndiv_m", f.q_ndiv_m}};
}

FamilyFlags flags_from_json(const json& j) {
  FamilyFlags f;
  f.m_not_0_mod_4 = j.at("m_not_0_mod_4").get<bool>();
  f.m_2_mod_64 = j.at("m_2_mod_64").get<bool>();
  f.p_ne_q = j.at("p_ne_q").get<bool>();
  f.p_ndiv_m = j.at("p_ndiv_m").get<bool>();
  f.q_ndiv_m = j.at("q_ndiv_m").get<bool>();
  return f;
}

json rationals_to_json(const std::vector<mpq_class>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.get_str());
  return out;
}

std::vector<mpq_class> rationals_from_json(const json& j) {
  std::vector<mpq_class> out;
  for (const auto& r : j) {
    mpq_class q(r.get<std::string>(), 10);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

json evidence_to_json(const NonDoubleEvidence& ev) {
  json coeffs = json::array();
  for (const auto& c : ev.quartic.coeffs) coeffs.push_back(c.get_str());
  json halves = json::array();
  for (const auto& h : ev.halves) halves.push_back(point_to_json(h));
  return json{{"label", ev.label},
              {"target", point_to_json(ev.target)},
              {"quartic", {{"coefficients", coeffs}, {"target_x", ev.quartic.target_x.get_str()}}},
              {"rational_roots", rationals_to_json(ev.roots)},
              {"halves", halves},
              {"holds", ev.holds()}};
}

NonDoubleEvidence evidence_from_json(const json& j) {
  NonDoubleEvidence ev;
  ev.label = j.at("label").get<std::string>();
  ev.target = point_from_json(j.at("target"));
  const auto& coeffs = j.at("quartic").at("coefficients");
  if (coeffs.size() != 5) throw Error(Errc::InvalidArgument, "quartic needs 5 coefficients");
  for (std::size_t i = 0; i < 5; ++i) ev.quartic.coeffs[i] = mpz_class(coeffs[i].get<std::string>(), 10);
  ev.quartic.target_x = mpq_class(j.at("quartic").at("target_x").get<std::string>(), 10);
  ev.quartic.target_x.canonicalize();
  ev.roots = rationals_from_json(j.at("rational_roots"));
  for (const auto& h : j.at("halves")) ev.halves.push_back(point_from_json(h));
  return ev;
}

}  // namespace

json to_json(const RankCertificate& cert) {
  json counts = json::array();
  for (const auto& c : cert.torsion.counts) counts.push_back({{"p", c.p}, {"order", c.order}});
  return json{
      {"family",
       {{"m", cert.family.m}, {"p", cert.family.p}, {"q", cert.family.q},
        {"flags", flags_to_json(cert.family.flags)}}},
      {"primes", cert.primes},
      {"torsion",
       {{"counts", counts},
        {"count_gcd", cert.torsion.count_gcd},
        {"order_bound", cert.torsion.bound},
        {"structure", cert.torsion.structure},
        {"holds", cert.torsion.holds()}}},
      {"a_not_double", evidence_to_json(cert.a_not_double)},
      {"b_not_double", evidence_to_json(cert.b_not_double)},
      {"ab_not_double", evidence_to_json(cert.ab_not_double)},
      {"rank_lower_bound", cert.rank_lower_bound},
      {"hypotheses_met", cert.hypotheses_met},
      {"note", cert.note},
      {"derivation", cert.derivation()},
  };
}

RankCertificate certificate_from_json(const json& j) {
  RankCertificate cert;
  const auto& fam = j.at("family");
  cert.family.m = fam.at("m").get<std::uint64_t>();
  cert.family.p = fam.at("p").get<std::uint64_t>();
  cert.family.q = fam.at("q").get<std::uint64_t>();
  cert.family.flags = flags_from_json(fam.at("flags"));
  cert.primes = j.at("primes").get<std::vector<std::uint64_t>>();
  const auto& t = j.at("torsion");
  for (const auto& c : t.at("counts")) {
    cert.torsion.counts.push_back({c.at("p").get<std::uint64_t>(), c.at("order").get<std::uint64_t>()});
  }
  cert.torsion.count_gcd = t.at("count_gcd").get<std::uint64_t>();
  cert.torsion.bound = t.at("order_bound").get<std::uint64_t>();
  cert.torsion.structure = t.at("structure").get<std::string>();
  cert.a_not_double = evidence_from_json(j.at("a_not_double"));
  cert.b_not_double = evidence_from_json(j.at("b_not_double"));
  cert.ab_not_double = evidence_from_json(j.at("ab_not_double"));
  cert.rank_lower_bound = j.at("rank_lower_bound").get<int>();
  cert.hypotheses_met = j.at("hypotheses_met").get<bool>();
  cert.note = j.at("note").get<std::string>();
  return cert;
}

json to_json(const Report& report) {
  json rows = json::array();
  std::map<std::string, int> tally;
  for (const auto& r : report.rows) {
    ++tally[std::string(to_string(r.status))];
    rows.push_back({
        {"line", r.row.line},
        {"m", r.row.m},
        {"pq", r.row.pq},
        {"p", r.row.p},
        {"q", r.row.q},
        {"claimed_rank", r.row.claimed_rank},
        {"occurrences", r.row.occurrences},
        {"flags", flags_to_json(r.flags)},
        {"status", to_string(r.status)},
        {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)},
        {"failure", r.failure},
        {"millis", r.millis},
    });
  }
  json errors = json::array();
  for (const auto& e : report.errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  return json{{"schema", report.schema},
              {"version", report.version},
              {"input", report.input},
              {"rows", rows},
              {"errors", errors},
              {"summary", tally}};
}

Report report_from_json(const json& j) {
  Report report;
  report.schema = j.at("schema").get<int>();
  if (report.schema != kSchemaVersion) {
    throw Error(Errc::InvalidArgument, "unsupported report schema " + std::to_string(report.schema));
  }
  report.version = j.at("version").get<std::string>();
  report.input = j.at("input");
  for (const auto& r : j.at("rows")) {
    RowReport row;
    row.row.line = r.at("line").get<int>();
    row.row.m = r.at("m").get<std::uint64_t>();
    row.row.pq = r.at("pq").get<std::uint64_t>();
    row.row.p = r.at("p").get<std::uint64_t>();
    row.row.q = r.at("q").get<std::uint64_t>();
    row.row.claimed_rank = r.at("claimed_rank").get<int>();
    row.row.occurrences = r.at("occurrences").get<int>();
    row.flags = flags_from_json(r.at("flags"));
    row.status = row_status_from_string(r.at("status").get<std::string>());
    if (!r.at("certificate").is_null()) row.certificate = certificate_from_json(r.at("certificate"));
    row.failure = r.at("failure").get<std::string>();
    row.millis = r.at("millis").get<std::int64_t>();
    report.rows.push_back(std::move(row));
  }
  for (const auto& e : j.at("errors")) {
    report.errors.push_back({e.at("line").get<int>(), e.at("message").get<std::string>()});
  }
  return report;
}

}  // namespace ecrank
