#include <gtest/gtest.h>

#include <qeccf/error.hpp>
#include <qeccf/parallel.hpp>
#include <qeccf/tablegen.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"

using namespace qeccf;

namespace {

CsvTable csv(const std::string& text) { return parse_csv(text); }

const char* kGolden =
    "# comment line\n"
    "Sl.,components,dim,detectable\n"
    "1,I2,4,2\n"
    "2,PZ+,2,?10\n"
    "3,PZ-,,10\n";

}  // namespace

TEST(Scenario, ParsesKeysAndSections) {
  const auto v = parse_scenarios(
      "# top comment\n"
      "[one]\n"
      "group = pauli:3\n"
      "subgroup = generated\n"
      "generators = XXI, ZZI\n"
      "slots = 0, 2\n"
      "basis.diag = ZZI\n"
      "[two]\n"
      "group = file:x.basis\n"
      "subgroup = whole\n"
      "seed = 5\n",
      "/tmp");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].name, "one");
  EXPECT_EQ(v[0].generators, (std::vector<std::string>{"XXI", "ZZI"}));
  EXPECT_EQ(v[0].slots, (std::vector<int>{0, 2}));
  EXPECT_TRUE(v[0].values.empty());  // filled in by the runner
  EXPECT_EQ(v[1].seed, 5u);
  EXPECT_EQ(v[1].resolve("x.basis"), std::filesystem::path("/tmp/x.basis"));
}

TEST(Scenario, UnknownKeyIsAnError) {
  EXPECT_THROW(parse_scenarios("[a]\nslotz = 1\n"), Error);
  EXPECT_THROW(parse_scenarios("[a]\nno equals sign\n"), Error);
}

TEST(Scenario, ValueMatrices) {
  const CMat y = oracle::pauli2('Y');
  EXPECT_LT(cxla::max_diff(value_matrix("PY+"), (CMat::Identity(2, 2) + y) / 2.0), 1e-15);
  EXPECT_LT(cxla::max_diff(value_matrix("PZ-"), (CMat::Identity(2, 2) - oracle::pauli2('Z')) / 2.0), 1e-15);
  EXPECT_LT(cxla::max_diff(value_matrix("O2"), CMat::Zero(2, 2)), 1e-15);
  EXPECT_LT(cxla::max_diff(value_matrix("I3", 3), CMat::Identity(3, 3)), 1e-15);
  EXPECT_THROW(value_matrix("PQ+"), Error);
}

TEST(GoldenDiff, SelfDiffIsClean) {
  const auto g = load_csv(oracle::data("golden/table4_1.csv"));
  // strip the "?" markers to build a table that agrees everywhere
  CsvTable produced = g;
  for (auto& row : produced.rows)
    for (auto& cell : row)
      if (!cell.empty() && cell[0] == '?') cell.erase(0, 1);
  const auto r = golden_diff(produced, g);
  EXPECT_TRUE(r.hard.empty());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.compared, r.matched);
}

TEST(GoldenDiff, DocumentedEmptyAndHardCells) {
  const auto golden = csv(kGolden);
  auto r = golden_diff(csv("Sl.,components,dim,detectable\n1,I2,4,2\n2,PZ+,2,10\n3,PZ-,99,10\n"), golden);
  EXPECT_EQ(r.exit_code(), 0);  // empty golden cell is not compared; "?10" matched

  r = golden_diff(csv("Sl.,components,dim,detectable\n1,I2,4,2\n2,PZ+,2,20\n3,PZ-,2,10\n"), golden);
  EXPECT_EQ(r.documented.size(), 1u);
  EXPECT_TRUE(r.hard.empty());
  EXPECT_EQ(r.exit_code(), 2);

  r = golden_diff(csv("Sl.,components,dim,detectable\n1,I2,3,2\n2,PZ+,2,20\n3,PZ-,2,10\n"), golden);
  ASSERT_EQ(r.hard.size(), 1u);
  EXPECT_EQ(r.hard[0].column, "dim");
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(GoldenDiff, MissingAndExtraRows) {
  const auto golden = csv(kGolden);
  auto r = golden_diff(csv("Sl.,components,dim,detectable\n1,I2,4,2\n2,PZ+,2,10\n"), golden);
  EXPECT_EQ(r.missing_rows.size(), 1u);
  EXPECT_EQ(r.exit_code(), 1);
  r = golden_diff(csv("Sl.,components,dim,detectable\n1,I2,4,2\n2,PZ+,2,10\n3,PZ-,2,10\n4,PX+,2,10\n"), golden);
  EXPECT_EQ(r.extra_rows.size(), 1u);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Csv, RoundTrip) {
  Table t;
  TableRow row;
  row.sl = 1;
  row.labels = {"O2", "I2"};
  row.is_clifford = true;
  row.dim = 2;
  row.detectable = 12;
  row.distance = "n/a";
  t.rows.push_back(row);
  const auto parsed = parse_csv(to_csv(t));
  ASSERT_EQ(parsed.rows.size(), 1u);
  EXPECT_EQ(parsed.header[1], "components");
  EXPECT_EQ(parsed.rows[0][1], "O2;I2");
  EXPECT_NE(to_markdown(t).find("| O2, I2 |"), std::string::npos);
}

TEST(Parallel, ForCoversEveryIndexAndRethrows) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

TEST(Parallel, EnvironmentOverride) {
  ::setenv("QECCF_THREADS", "3", 1);
  EXPECT_EQ(default_threads(), 3);
  ::unsetenv("QECCF_THREADS");
  EXPECT_GE(default_threads(), 1);
}

TEST(TableRun, DeterministicAndThreadIndependent) {
  const auto s = load_scenario(oracle::data("scenarios/table4_6.scn"));
  const std::string serial = to_csv(run_scenario(s, 1));
  EXPECT_EQ(serial, to_csv(run_scenario(s, 1)));
  EXPECT_EQ(serial, to_csv(run_scenario(s, 4)));
  auto reseeded = s;
  reseeded.seed = 99;
  EXPECT_EQ(serial, to_csv(run_scenario(reseeded, 2)));
}

TEST(TableRun, EnumerationOrder) {
  auto s = load_scenario(oracle::data("scenarios/table4_6.scn"));
  const auto t = run_scenario(s, 1);
  const std::size_t k = s.values.size();
  ASSERT_EQ(t.rows.size(), k * k - 1);
  EXPECT_EQ(t.rows.front().labels, (std::vector<std::string>{s.values[0], s.values[1]}));
  EXPECT_EQ(t.rows[k - 1].labels, (std::vector<std::string>{s.values[1], s.values[0]}));
  EXPECT_EQ(t.rows.back().labels, (std::vector<std::string>{s.values[k - 1], s.values[k - 1]}));
  for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(t.rows[i].sl, static_cast<int>(i + 1));
}

TEST(TableRun, FiveQubitSingleSlotRows) {
  auto s = load_scenario(oracle::data("scenarios/table4_1.scn"));
  s.slots = {s.slots.front()};
  s.values = {"I2"};
  const auto t = run_scenario(s, 1);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].dim, 2);
  EXPECT_EQ(t.rows[0].distance, "3");
  EXPECT_TRUE(t.rows[0].is_clifford);
}
