#include <gtest/gtest.h>

#include <algorithm>

#include "udrfusion/report.hpp"

namespace udrfusion {
namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& item : j.items()) out.push_back(item.key());
  return out;
}

TEST(AnalyzeDihedral, FiveElevenTwo) {
  const auto report = analyze_dihedral(DihedralParams::smallest(5), 2);
  const auto j = to_json(report);
  EXPECT_EQ(keys(j), (std::vector<std::string>{"version", "params", "fusion", "reps", "checks"}));
  EXPECT_EQ(j["params"]["p"], 11);
  EXPECT_EQ(j["params"]["omega_set"], Json::array({1, 2}));
  ASSERT_EQ(j["reps"].size(), 2u);
  EXPECT_EQ(j["reps"][0]["udr"], "Zp[[t]]/(t^2,pt)");
  EXPECT_EQ(j["reps"][0]["maximal"], true);
  EXPECT_EQ(j["reps"][1]["udr"], "Zp");
  EXPECT_EQ(j["reps"][1]["maximal"], false);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(AnalyzeDihedral, SixSevenOne) {
  const auto j = to_json(analyze_dihedral(DihedralParams::with_prime(6, 7), 1));
  EXPECT_EQ(j["fusion"]["numbers"], (Json{{"1", 1}, {"6", 6}, {"12", 1}}));
  EXPECT_EQ(j["fusion"]["weighted_total"], 49);
  for (const auto& rep : j["reps"]) EXPECT_EQ(rep["udr"], "Zp");
  for (const auto& rep : j["reps"]) {
    for (const char* field : {"j", "gcd", "T", "in_omega", "d1", "d2", "udr"}) EXPECT_TRUE(rep.contains(field));
  }
}

TEST(AnalyzeDihedral, RejectsIndexOutOfRange) {
  EXPECT_THROW(analyze_dihedral(DihedralParams::smallest(6), 3), ParameterError);
  EXPECT_THROW(analyze_dihedral(DihedralParams::smallest(6), 0), ParameterError);
}

TEST(AnalyzeDihedral, ByteDeterministic) {
  const auto a = to_json(analyze_dihedral(DihedralParams::smallest(8), 2)).dump(2);
  const auto b = to_json(analyze_dihedral(DihedralParams::smallest(8), 2)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_csv(analyze_dihedral(DihedralParams::smallest(8), 2)),
            to_csv(analyze_dihedral(DihedralParams::smallest(8), 2)));
}

TEST(AnalyzeDihedral, CsvHasOneRowPerRep) {
  const auto csv = to_csv(analyze_dihedral(DihedralParams::smallest(9), 3));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4);
  EXPECT_EQ(csv.find('"'), std::string::npos);
}

TEST(AnalyzeAbelian, ReportShape) {
  const auto report = analyze_abelian(AbelianParams({3}, 7), {1}, {2});
  const auto j = to_json(report);
  EXPECT_EQ(keys(j), (std::vector<std::string>{"version", "params", "fusion", "reps", "checks"}));
  EXPECT_EQ(j["fusion"]["fixed_count"], 1);
  EXPECT_EQ(j["fusion"]["weighted_total"], 49);
  EXPECT_EQ(j["reps"].size(), 3u);
  EXPECT_EQ(j["reps"][0]["d2"], 1);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
  EXPECT_THROW(analyze_abelian(AbelianParams({3}, 7), {1, 1}, {0}), ParameterError);
}

TEST(Scan, RowCountsAndOrder) {
  const auto rows = scan_dihedral(3, 6, 1);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(std::tie(rows[i - 1].n, rows[i - 1].p, rows[i - 1].i0), std::tie(rows[i].n, rows[i].p, rows[i].i0));
  }
  EXPECT_EQ(scan_dihedral(3, 6, 2).size(), 12u);
  EXPECT_THROW(scan_dihedral(6, 3, 1), ParameterError);
  EXPECT_THROW(scan_dihedral(2, 6, 1), ParameterError);
}

TEST(Scan, DeterminabilityColumn) {
  for (const auto& row : scan_dihedral(8, 12, 1)) {
    if (row.n == 8) {
      EXPECT_TRUE(row.determinable);
    }
    if (row.n == 12) {
      EXPECT_FALSE(row.determinable);
    }
  }
}

TEST(Verification, NamedGridsPass) {
  for (const auto& name : {"lemma410", "prop48", "cor49", "thm43"}) {
    const auto reports = run_verification(name, std::nullopt);
    EXPECT_FALSE(reports.empty());
    for (const auto& r : reports) EXPECT_TRUE(r.passed) << to_text(r);
  }
  EXPECT_THROW(run_verification("thm99", std::nullopt), ParameterError);
}

TEST(Verification, DeterminabilityTable) {
  const auto table = determinability_table(30);
  ASSERT_EQ(table.size(), 14u);
  for (const auto& row : table) {
    for (bool d : row.determinable) EXPECT_EQ(d, row.predicate) << "n=" << row.n;
    EXPECT_EQ(row.witness.has_value(), !row.predicate);
  }
  EXPECT_EQ(table[4].n, 12);
  EXPECT_EQ(*table[4].witness, std::make_pair(1, 3));
}

TEST(Verification, TextFormat) {
  const auto r = verify_lemma_410(12, 4);
  EXPECT_EQ(to_text(r), "PASS lemma410 n=12 i0=4");
  const auto j = to_json(r, true);
  EXPECT_EQ(j["parameters"]["n"], 12);
  EXPECT_TRUE(j["witness"].is_null());
}

}  // namespace
}  // namespace udrfusion
