#include <gtest/gtest.h>

#include <cstdlib>

#include "c1cox/cli.hpp"
#include "c1cox/json_util.hpp"

using namespace c1cox;

namespace {

const std::string kDataDir = C1COX_TEST_DATA_DIR;

JobSpec job(const std::string& command, const std::string& file = "") {
  JobSpec j;
  j.command = command;
  if (!file.empty()) j.input_path = kDataDir + "/" + file;
  return j;
}

}  // namespace

TEST(Cli, ValidateSl2) {
  const RunResult r = run(job("validate", "sl2.toml"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "Type 1, r=2, dim 3, K0 ≅ Z^2\n");
}

TEST(Cli, RelationsAndFactorial) {
  EXPECT_EQ(run(job("relations", "sl2.toml")).output.rfind("g1 = T11 T12 - T21 T22 - 1", 0), 0u);
  const RunResult f = run(job("factorial", "e6.toml"));
  EXPECT_EQ(f.exit_code, 0);
  EXPECT_EQ(f.output.rfind("factorial: no\n", 0), 0u);
}

TEST(Cli, ResolveText) {
  const RunResult r = run(job("resolve", "e6.toml"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("case: elliptic\n"), std::string::npos);
  EXPECT_NE(r.output.find("resolution graph: E6\n"), std::string::npos);
  JobSpec dot = job("resolve", "parabolic.toml");
  dot.dot = true;
  const RunResult d = run(dot);
  EXPECT_EQ(d.output.rfind("graph resolution {", 0), 0u);
}

TEST(Cli, DuvalJsonSchema) {
  JobSpec j = job("duval");
  j.duval_type = "E7";
  j.format = OutputFormat::Json;
  const RunResult r = run(j);
  ASSERT_EQ(r.exit_code, 0);
  const Json doc = Json::parse(r.output);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["command"], "duval");
  EXPECT_EQ(doc["type"], "E7");
  EXPECT_EQ(doc["reproduced_by_resolution"], true);
  EXPECT_EQ(doc["P_tilde"].size(), 3u);

  j.c = -1;
  j.duval_type = "E6";
  const Json fam = Json::parse(run(j).output);
  EXPECT_EQ(fam["all_minus_two"], true);
  j.c = 0;
  EXPECT_EQ(Json::parse(run(j).output)["all_minus_two"], false);
}

TEST(Cli, ExitCodes) {
  const RunResult dup = run(job("validate", "duplicate_column.toml"));
  EXPECT_EQ(dup.exit_code, 1);
  EXPECT_EQ(dup.diagnostic.rfind("error: DuplicateColumn: ", 0), 0u);
  EXPECT_EQ(run(job("validate", "missing.toml")).exit_code, 2);
  EXPECT_EQ(run(job("validate", "malformed.toml")).exit_code, 2);
  JobSpec bad_q = job("duval");
  bad_q.duval_type = "D";
  bad_q.q = 3;
  EXPECT_EQ(run(bad_q).exit_code, 1);
  EXPECT_EQ(run(job("resolve", "sl2.toml")).exit_code, 1);
}

TEST(Cli, Deterministic) {
  JobSpec j = job("resolve", "e6.json");
  j.format = OutputFormat::Json;
  const RunResult a = run(j);
  const RunResult b = run(j);
  EXPECT_EQ(a.output, b.output);
  j.strict_comprises = true;
  EXPECT_EQ(run(j).output, a.output);
}

TEST(Cli, FaceCap) {
  JobSpec j = job("ambient", "e6.toml");
  j.face_cap = 2;
  EXPECT_EQ(run(j).exit_code, 1);
  setenv("C1COX_FACE_CAP", "2", 1);
  EXPECT_EQ(run(job("ambient", "e6.toml")).exit_code, 1);
  unsetenv("C1COX_FACE_CAP");
  EXPECT_EQ(run(job("ambient", "e6.toml")).exit_code, 0);
}
