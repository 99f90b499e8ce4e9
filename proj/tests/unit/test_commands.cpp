#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "ecrank/commands.hpp"

namespace ecrank {
namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("ecrank_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << contents;
  return p;
}

TEST(Commands, InfoEnvelope) {
  const CommandOutput out = cmd_info(2, 3, 7);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.json["schema"], 1);
  EXPECT_EQ(out.json["command"], "info");
  EXPECT_EQ(out.json["result"]["discriminant"], "-84011696");
  EXPECT_EQ(out.json["result"]["marked_points"]["A+B"]["x"], "-2");
  EXPECT_TRUE(out.json["result"]["hypotheses_met"]);
}

TEST(Commands, InputErrorsExitTwo) {
  EXPECT_EQ(cmd_info(2, 9, 7).exit_code, exit_status::kInputError);
  EXPECT_EQ(cmd_info(2, 3, 3).json["result"]["error"], "EqualPrimes");
  EXPECT_EQ(cmd_count("0", "1", 4).exit_code, exit_status::kInputError);
  EXPECT_EQ(cmd_count("0", "1", 3).json["result"]["error"], "BadReduction");
  EXPECT_EQ(cmd_count("zero", "1", 5).exit_code, exit_status::kInputError);
  EXPECT_EQ(cmd_rank_lb(0, 3, 7, {}).exit_code, exit_status::kInputError);
  EXPECT_EQ(cmd_torsion(2, 3, 11, {13}).exit_code, exit_status::kInputError);  // NoUsablePrime
}

TEST(Commands, Count) {
  const CommandOutput out = cmd_count("0", "1", 5);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.json["result"]["order"], 6);
  EXPECT_EQ(cmd_count("-100000000000000000000000000004", "441", 7).json["result"]["a_p"],
            mpz_class((mpz_class("-100000000000000000000000000004") % 7 + 7) % 7).get_ui());
}

TEST(Commands, TorsionAndRank) {
  const CommandOutput t = cmd_torsion(2, 3, 7, {});
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_EQ(t.json["result"]["structure"], "trivial");
  const CommandOutput unmet = cmd_torsion(4, 3, 7, {});
  EXPECT_EQ(unmet.exit_code, 0);
  EXPECT_EQ(unmet.json["result"]["note"], "hypotheses_unmet");

  CertifyOptions opts;
  opts.timings = false;
  const CommandOutput r = cmd_rank_lb(2, 3, 7, opts);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json["rows"][0]["status"], "certified_lb2");
  EXPECT_EQ(cmd_rank_lb(4, 3, 7, opts).exit_code, exit_status::kCertificationFailure);
  EXPECT_EQ(cmd_rank_lb(2, 3, 7, opts).text, r.text);
}

TEST(Commands, TableExitCodes) {
  CertifyOptions opts;
  opts.timings = false;
  const fs::path good = temp_file("good.csv", "m,pq,claimed_rank\n2,21,2\n66,65,2\n");
  const fs::path unmet = temp_file("unmet.csv", "m,pq,claimed_rank\n2,21,2\n4,21,2\n");
  const fs::path bad = temp_file("bad.csv", "m,pq,claimed_rank\n2,16,2\n2,21,2\n");
  const fs::path out = fs::temp_directory_path() / ("ecrank_" + std::to_string(::getpid()) + ".json");
  const CommandOutput g = cmd_table(good.string(), out.string(), opts);
  EXPECT_EQ(g.exit_code, 0);
  std::ifstream written(out);
  EXPECT_EQ(nlohmann::json::parse(written), g.json);
  EXPECT_EQ(cmd_table(unmet.string(), "", opts).exit_code, exit_status::kCertificationFailure);
  const CommandOutput b = cmd_table(bad.string(), "", opts);
  EXPECT_EQ(b.exit_code, exit_status::kBatchParseError);
  EXPECT_EQ(b.json["rows"].size(), 1u);
  EXPECT_EQ(cmd_table("/nonexistent/table.csv", "", opts).exit_code, exit_status::kInputError);
  for (const auto& p : {good, unmet, bad, out}) fs::remove(p);
}

TEST(Commands, TableOutputIsByteStableWithoutTimings) {
  CertifyOptions opts;
  opts.timings = false;
  const std::string path = ECRANK_DATA_DIR "/table1.csv";
  const auto first = cmd_table(path, "", opts);
  opts.workers = 3;
  const auto second = cmd_table(path, "", opts);
  EXPECT_EQ(first.json.dump(2), second.json.dump(2));
  EXPECT_EQ(first.text, second.text);
}

TEST(Commands, VerifyLemmas) {
  const CommandOutput ok = cmd_verify_lemmas(false, false);
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(ok.json["result"]["all_ok"]);
  EXPECT_EQ(ok.text, cmd_verify_lemmas(false, false).text);
  const CommandOutput mutant = cmd_verify_lemmas(false, true);
  EXPECT_EQ(mutant.exit_code, exit_status::kCertificationFailure);
  EXPECT_FALSE(mutant.json["result"]["all_ok"]);
  const CommandOutput list = cmd_verify_lemmas(true, false);
  EXPECT_EQ(list.exit_code, 0);
  EXPECT_EQ(list.json["result"]["specs"].size(), ok.json["result"]["specs"].size());
}

}  // namespace
}  // namespace ecrank
