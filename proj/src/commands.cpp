#include "ecrank/commands.hpp"

#include <fstream>
#include <sstream>

#include "ecrank/error.hpp"
#include "ecrank/finite_reduction.hpp"
#include "ecrank/obstruction.hpp"
#include "ecrank/torsion.hpp"

namespace ecrank {

using nlohmann::json;

namespace {

json envelope(const std::string& command, json input, json result) {
  return json{{"schema", kSchemaVersion},
              {"version", std::string(tool_version())},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

CommandOutput failure(const std::string& command, json input, const Error& e) {
  CommandOutput out;
  out.exit_code = e.code() == Errc::CertificateFailed || e.code() == Errc::Internal
                      ? exit_status::kCertificationFailure
                      : exit_status::kInputError;
  out.json = envelope(command, std::move(input),
                      json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
  out.text = std::string("error: ") + e.what() + "\n";
  return out;
}

std::string curve_text(const CurveQ& c) {
  std::ostringstream os;
  os << "y^2 = x^3";
  if (c.a() != 0) os << (c.a() < 0 ? " - " : " + ") << mpz_class(abs(c.a())).get_str() << "x";
  if (c.b() != 0) os << (c.b() < 0 ? " - " : " + ") << mpz_class(abs(c.b())).get_str();
  return os.str();
}

std::string flags_text(const FamilyFlags& f) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << "m_not_0_mod_4=" << b(f.m_not_0_mod_4) << " m_2_mod_64=" << b(f.m_2_mod_64)
     << " p_ne_q=" << b(f.p_ne_q) << " p_ndiv_m=" << b(f.p_ndiv_m)
     << " q_ndiv_m=" << b(f.q_ndiv_m);
  return os.str();
}

json family_input(std::int64_t m, std::int64_t p, std::int64_t q) {
  return json{{"m", m}, {"p", p}, {"q", q}};
}

std::string row_line(const RowReport& r) {
  std::ostringstream os;
  os << "m=" << r.row.m << " pq=" << r.row.pq << " (" << r.row.p << "*" << r.row.q
     << ") claimed_rank=" << r.row.claimed_rank << ": " << to_string(r.status);
  if (r.certificate) os << " rank>=" << r.certificate->rank_lower_bound;
  if (!r.failure.empty()) os << " [" << r.failure << "]";
  return os.str();
}

}  // namespace

CommandOutput cmd_info(std::int64_t m, std::int64_t p, std::int64_t q) {
  const json input = family_input(m, p, q);
  try {
    const Family family = make_family(m, p, q);
    const MarkedPoints marked = marked_points(family);
    const auto& f = family.params.flags;
    CommandOutput out;
    out.json = envelope(
        "info", input,
        json{{"curve", {{"a", family.curve.a().get_str()}, {"b", family.curve.b().get_str()}}},
             {"discriminant", family.curve.discriminant().get_str()},
             {"flags",
              {{"m_not_0_mod_4", f.m_not_0_mod_4},
               {"m_2_mod_64", f.m_2_mod_64},
               {"p_ne_q", f.p_ne_q},
               {"p_ndiv_m", f.p_ndiv_m},
               {"q_ndiv_m", f.q_ndiv_m}}},
             {"hypotheses_met", family.params.hypotheses_met()},
             {"marked_points",
              {{"A", point_to_json(marked.a)},
               {"B", point_to_json(marked.b)},
               {"A+B", point_to_json(marked.ab)}}}});
    std::ostringstream os;
    os << "C_" << m << ": " << curve_text(family.curve) << "  (p=" << p << ", q=" << q << ")\n"
       << "discriminant: " << family.curve.discriminant().get_str() << "\n"
       << "flags: " << flags_text(f) << "\n"
       << "hypotheses met: " << (family.params.hypotheses_met() ? "yes" : "no") << "\n"
       << "A = " << marked.a << "\nB = " << marked.b << "\nA+B = " << marked.ab << "\n";
    out.text = os.str();
    return out;
  } catch (const Error& e) {
    return failure("info", input, e);
  }
}

CommandOutput cmd_count(const std::string& a, const std::string& b, std::uint64_t prime) {
  const json input = json{{"a", a}, {"b", b}, {"prime", prime}};
  try {
    mpz_class az, bz;
    if (az.set_str(a, 10) != 0) throw Error(Errc::InvalidArgument, "a is not an integer: " + a);
    if (bz.set_str(b, 10) != 0) throw Error(Errc::InvalidArgument, "b is not an integer: " + b);
    const FiniteCurve fc = make_finite_curve(prime, az, bz);
    const PointCount count = count_points(fc);
    CommandOutput out;
    out.json = envelope("count", input,
                        json{{"p", count.p}, {"a_p", fc.a}, {"b_p", fc.b}, {"order", count.order}});
    out.text = "#E(F_" + std::to_string(count.p) + ") = " + std::to_string(count.order) +
               "  for y^2 = x^3 + " + std::to_string(fc.a) + "x + " + std::to_string(fc.b) + "\n";
    return out;
  } catch (const Error& e) {
    return failure("count", input, e);
  }
}

CommandOutput cmd_torsion(std::int64_t m, std::int64_t p, std::int64_t q,
                          const std::vector<std::uint64_t>& primes) {
  json input = family_input(m, p, q);
  input["primes"] = primes;
  try {
    const Family family = make_family(m, p, q);
    const std::vector<std::uint64_t> used = primes.empty() ? default_primes(family.curve) : primes;
    const TorsionReport report = torsion_subgroup(family.curve, used);
    json counts = json::array();
    for (const auto& c : report.divisor_bound.counts) counts.push_back({{"p", c.p}, {"order", c.order}});
    json points = json::array();
    for (const auto& t : report.points) points.push_back({{"point", point_to_json(t.point)}, {"order", t.order}});
    const bool met = family.params.hypotheses_met();
    CommandOutput out;
    out.json = envelope("torsion", input,
                        json{{"structure", report.structure()},
                             {"order", report.order()},
                             {"primes", used},
                             {"counts", counts},
                             {"count_gcd", report.divisor_bound.count_gcd},
                             {"order_bound", report.order_bound()},
                             {"points", points},
                             {"hypotheses_met", met},
                             {"note", met ? "" : "hypotheses_unmet"}});
    std::ostringstream os;
    os << "torsion: " << report.structure() << " (order " << report.order() << ")\n";
    os << "counts:";
    for (const auto& c : report.divisor_bound.counts) os << " #E(F_" << c.p << ")=" << c.order;
    os << "\ngcd " << report.divisor_bound.count_gcd << ", order bound " << report.order_bound()
       << "\n";
    for (const auto& t : report.points) os << "  " << t.point << " of order " << t.order << "\n";
    if (!met) os << "note: hypotheses_unmet (" << flags_text(family.params.flags) << ")\n";
    out.text = os.str();
    if (met && !report.trivial()) out.exit_code = exit_status::kCertificationFailure;
    return out;
  } catch (const Error& e) {
    return failure("torsion", input, e);
  }
}

CommandOutput cmd_rank_lb(std::int64_t m, std::int64_t p, std::int64_t q,
                          const CertifyOptions& options) {
  json input = family_input(m, p, q);
  input["primes"] = options.primes;
  try {
    const Family family = make_family(m, p, q);
    TableRow row;
    row.m = family.params.m;
    row.p = family.params.p;
    row.q = family.params.q;
    row.pq = family.params.pq();
    TableInput table;
    table.rows.push_back(row);
    CertifyOptions single = options;
    single.workers = 1;
    const Report report = certify_table(table, single, input);
    CommandOutput out;
    out.json = to_json(report);
    out.exit_code = exit_code(report);
    const RowReport& r = report.rows.front();
    std::ostringstream os;
    os << row_line(r) << "\n";
    if (r.certificate) os << r.certificate->derivation() << "\n";
    out.text = os.str();
    return out;
  } catch (const Error& e) {
    return failure("rank-lb", input, e);
  }
}

CommandOutput cmd_table(const std::string& input_path, const std::string& output_path,
                        const CertifyOptions& options) {
  json input = json{{"input", input_path}, {"primes", options.primes}};
  std::ifstream in(input_path);
  if (!in) {
    return failure("table", input, Error(Errc::InvalidArgument, "cannot read " + input_path));
  }
  const TableInput table = parse_table_csv(in);
  const Report report = certify_table(table, options, input);
  CommandOutput out;
  out.json = to_json(report);
  out.exit_code = exit_code(report);
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) {
      return failure("table", input, Error(Errc::InvalidArgument, "cannot write " + output_path));
    }
    file << out.json.dump(2) << "\n";
  }
  std::ostringstream os;
  int certified = 0, unmet = 0, failed = 0;
  for (const auto& r : report.rows) {
    os << row_line(r) << "\n";
    switch (r.status) {
      case RowStatus::CertifiedLb2: ++certified; break;
      case RowStatus::HypothesesUnmet: ++unmet; break;
      case RowStatus::Failed: ++failed; break;
    }
  }
  for (const auto& e : report.errors) os << "line " << e.line << ": " << e.message << "\n";
  os << "rows=" << report.rows.size() << " certified_lb2=" << certified
     << " hypotheses_unmet=" << unmet << " failed=" << failed
     << " rejected_lines=" << report.errors.size() << "\n";
  out.text = os.str();
  return out;
}

CommandOutput cmd_verify_lemmas(bool list_only, bool inject_mutant) {
  std::vector<ObstructionSpec> corpus = builtin_obstructions();
  if (inject_mutant) {
    for (const auto& spec : corpus) {
      if (spec.name == "A-not-double-terminal") {
        corpus.push_back(mutate_constant(spec));
        break;
      }
    }
  }
  CommandOutput out;
  json specs = json::array();
  std::ostringstream os;
  if (list_only) {
    for (const auto& spec : corpus) {
      os << describe(spec) << "\n\n";
      specs.push_back({{"name", spec.name},
                       {"lemma", spec.lemma},
                       {"congruence", spec.display},
                       {"modulus", spec.modulus},
                       {"expected", to_string(spec.expected)}});
    }
    out.json = envelope("verify-lemmas", json{{"list", true}}, json{{"specs", specs}});
    out.text = os.str();
    return out;
  }
  bool all_ok = true;
  for (const auto& spec : corpus) {
    std::vector<Assignment> solutions;
    try {
      solutions = check_obstruction(spec);
    } catch (const Error& e) {
      return failure("verify-lemmas", json{{"spec", spec.name}}, e);
    }
    const bool empty = solutions.empty();
    const bool ok = (spec.expected == Expectation::Empty) == empty;
    all_ok = all_ok && ok;
    json sample = json::array();
    for (std::size_t i = 0; i < solutions.size() && i < 5; ++i) {
      json assignment;
      for (std::size_t v = 0; v < spec.variables.size(); ++v) {
        assignment[spec.variables[v].name] = solutions[i][v];
      }
      sample.push_back(assignment);
    }
    specs.push_back({{"name", spec.name},
                     {"lemma", spec.lemma},
                     {"congruence", spec.display},
                     {"modulus", spec.modulus},
                     {"search_space", spec.search_space()},
                     {"expected", to_string(spec.expected)},
                     {"solutions", solutions.size()},
                     {"witnesses", sample},
                     {"ok", ok}});
    os << (ok ? "ok   " : "FAIL ") << spec.name << "  mod " << spec.modulus << "  expected "
       << to_string(spec.expected) << ", found " << solutions.size() << " solution(s)\n";
  }
  os << (all_ok ? "all obstruction verdicts match\n" : "obstruction verdict mismatch\n");
  out.json = envelope("verify-lemmas", json{{"inject_mutant", inject_mutant}},
                      json{{"specs", specs}, {"all_ok", all_ok}});
  out.text = os.str();
  out.exit_code = all_ok ? exit_status::kSuccess : exit_status::kCertificationFailure;
  return out;
}

}  // namespace ecrank
