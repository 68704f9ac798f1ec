#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qschubert/report.hpp"
#include "qschubert/sweep.hpp"

using namespace qschubert;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qschubert-sweep-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Report, BigIntJson) {
  EXPECT_EQ(bigint_to_json(BigInt(85)), nlohmann::json(85));
  const BigInt huge = BigInt(1) << 80;
  EXPECT_TRUE(bigint_to_json(huge).is_string());
  EXPECT_EQ(bigint_from_json(bigint_to_json(huge)), huge);
  EXPECT_EQ(bigint_from_json(bigint_to_json(BigInt(-3))), -3);
}

TEST(Report, RankRecord) {
  const auto q = RankQuery::symmetric(SlnWeight::fundamental(7, 3), 2);
  const auto j = rank_result_json(q, rank(q));
  EXPECT_EQ(j.at("rank"), 85);
  EXPECT_EQ(j.at("dictionary_case"), "quantum");
  EXPECT_EQ(j.at("s"), 1);
  EXPECT_EQ(j.at("grassmannian"), "Gr(7,9)");
  EXPECT_EQ(j.at("weights").size(), 7u);
}

TEST(Sweep, ParseRange) {
  EXPECT_EQ(parse_range("4..6").lo, 4);
  EXPECT_EQ(parse_range("4..6").hi, 6);
  EXPECT_EQ(parse_range("3").hi, 3);
  EXPECT_THROW(parse_range("6..4"), ParseError);
  EXPECT_THROW(parse_range("a..4"), ParseError);
}

TEST(Sweep, ValidatesConfig) {
  SweepConfig c;
  c.n_range = {1, 3};
  EXPECT_THROW(run_sweep(c), std::invalid_argument);
  c.n_range = {4, 4};
  c.parallelism = 0;
  EXPECT_THROW(run_sweep(c), std::invalid_argument);
}

TEST(Sweep, ReportShape) {
  SweepConfig c;
  c.n_range = {4, 5};
  c.level_range = {1, 2};
  const auto outcome = run_sweep(c);
  EXPECT_TRUE(outcome.pass);
  EXPECT_EQ(outcome.cells_computed, 4);
  const auto& cells = outcome.report.at("cells");
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].at("n"), 4);
  EXPECT_EQ(cells[0].at("level"), 1);
  EXPECT_EQ(cells[3].at("weights"), 15);
  EXPECT_EQ(outcome.report.at("verdict"), "PASS");
}

TEST(Sweep, ResumeReproducesReport) {
  const fs::path dir = scratch_dir("resume");
  SweepConfig c;
  c.n_range = {4, 5};
  c.level_range = {1, 3};
  c.output_path = (dir / "straight.json").string();
  run_sweep(c);

  // A partial run over the first cells, then the full run on the same checkpoint.
  SweepConfig partial = c;
  partial.n_range = {4, 4};
  partial.output_path.clear();
  partial.checkpoint_path = (dir / "ckpt.json").string();
  EXPECT_EQ(run_sweep(partial).cells_computed, 3);

  SweepConfig resumed = c;
  resumed.checkpoint_path = partial.checkpoint_path;
  resumed.output_path = (dir / "resumed.json").string();
  resumed.csv_path = (dir / "resumed.csv").string();
  const auto outcome = run_sweep(resumed);
  EXPECT_EQ(outcome.cells_resumed, 3);
  EXPECT_EQ(outcome.cells_computed, 3);
  EXPECT_EQ(slurp(dir / "straight.json"), slurp(dir / "resumed.json"));

  const std::string csv = slurp(dir / "resumed.csv");
  EXPECT_EQ(csv.rfind("n,level,weight", 0), 0u);
  EXPECT_NE(csv.find("4,1,\"(1,0,0)\",\"[1]\",1,false,true,classical,"), std::string::npos);
}

TEST(Sweep, CheckpointWithOtherModeStartsFresh) {
  const fs::path dir = scratch_dir("mode");
  SweepConfig c;
  c.n_range = {4, 4};
  c.level_range = {1, 2};
  c.checkpoint_path = (dir / "ckpt.json").string();
  c.early_exit = true;
  run_sweep(c);
  c.early_exit = false;
  EXPECT_EQ(run_sweep(c).cells_resumed, 0);
  EXPECT_EQ(run_sweep(c).cells_resumed, 2);
}

TEST(Sweep, CorruptCheckpointIsAnIoError) {
  const fs::path dir = scratch_dir("corrupt");
  std::ofstream(dir / "ckpt.json") << "{ not json";
  SweepConfig c;
  c.checkpoint_path = (dir / "ckpt.json").string();
  EXPECT_THROW(run_sweep(c), IoError);
  std::ofstream(dir / "other.json") << R"({"format": "something-else"})";
  c.checkpoint_path = (dir / "other.json").string();
  EXPECT_THROW(run_sweep(c), IoError);
}

TEST(Sweep, EarlyExitVerdictsMatchFullRun) {
  SweepConfig c;
  c.n_range = {4, 5};
  c.level_range = {2, 3};
  c.early_exit = true;
  const auto fast = run_sweep(c).report;
  c.early_exit = false;
  const auto full = run_sweep(c).report;
  ASSERT_EQ(fast.at("cells").size(), full.at("cells").size());
  for (std::size_t i = 0; i < fast["cells"].size(); ++i) {
    const auto& a = fast["cells"][i]["records"];
    const auto& b = full["cells"][i]["records"];
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      EXPECT_EQ(a[j]["in_lambda"], b[j]["in_lambda"]);
      EXPECT_EQ(a[j]["consistent"], b[j]["consistent"]);
      EXPECT_EQ(a[j]["rank_or_bound"] == 1 && !a[j]["rank_is_lower_bound"].get<bool>(), b[j]["rank_or_bound"] == 1);
    }
  }
}
