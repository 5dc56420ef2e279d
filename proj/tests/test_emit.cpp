#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebell/emit.hpp"
#include "ebell/errors.hpp"

namespace ebell {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string render(const ScanConfig& c, OutputFormat f, unsigned threads = 1) {
  const ScanResult r = collect_scan(c, threads);
  std::ostringstream out;
  emit(c, r.records, r.summary, f, out);
  return out.str();
}

ScanConfig wigner_point() {
  ScanConfig c;
  c.kind = CheckKind::wigner;
  c.ranges = {AngleRange::single(0), AngleRange::single(kPi / 3), AngleRange::single(2 * kPi / 3)};
  return c;
}

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.125), "-0.125");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_number(kPi)), kPi);
}

TEST(MatrixJson, Layout) {
  GeneralMatrix m;
  m << cplx(1, 0), cplx(0, -0.5), cplx(0, 0.5), cplx(0.25, 0);
  EXPECT_EQ(matrix_json(m), "[[[1, 0], [0, -0.5]], [[0, 0.5], [0.25, 0]]]");
}

TEST(Csv, EmptyScanIsHeaderOnly) {
  ScanConfig c;
  c.ranges[0] = AngleRange{1, 1, 0.1, true, false};
  EXPECT_EQ(render(c, OutputFormat::csv), std::string(kCsvHeader) + "\n");
}

TEST(Csv, HoldingMatrixRow) {
  ScanConfig c;
  c.ranges = {AngleRange::single(0), AngleRange::single(0), AngleRange::single(0)};
  const auto lines = split(render(c, OutputFormat::csv), '\n');
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], kCsvHeader);
  EXPECT_EQ(lines[1], "matrix_entrywise,0,0,0,+,+,+,entrywise,true,0,1,0,0,0,ok");
  EXPECT_EQ(lines[2], "");
}

TEST(Csv, WignerViolationRow) {
  const auto lines = split(render(wigner_point(), OutputFormat::csv), '\n');
  ASSERT_GE(lines.size(), 2u);
  const auto f = split(lines[1], ',');
  ASSERT_EQ(f.size(), 15u);
  EXPECT_EQ(f[0], "wigner_prob");
  EXPECT_EQ(f[4], "");
  EXPECT_EQ(f[7], "");
  EXPECT_EQ(f[8], "false");
  EXPECT_NEAR(std::stod(f[9]), -0.125, 1e-12);
  EXPECT_EQ(f[14], "ok");
}

TEST(Csv, NotComparableRowLeavesVerdictBlank) {
  ScanConfig c;
  c.alpha = 0.4;
  c.ranges = {AngleRange::single(1.0), AngleRange::single(0.5), AngleRange::single(2.0)};
  const auto lines = split(render(c, OutputFormat::csv), '\n');
  const auto f = split(lines[1], ',');
  ASSERT_EQ(f.size(), 15u);
  for (int i = 8; i <= 13; ++i) EXPECT_EQ(f[i], "") << i;
  EXPECT_EQ(f[14], "not_comparable");
}

TEST(Json, ParsesAndCarriesSummary) {
  const nlohmann::json j = nlohmann::json::parse(render(wigner_point(), OutputFormat::json));
  EXPECT_EQ(j["config"]["kind"], "wigner");
  ASSERT_EQ(j["records"].size(), 1u);
  const auto& r = j["records"][0];
  EXPECT_EQ(r["holds"], false);
  EXPECT_NEAR(r["worst_margin"].get<double>(), -0.125, 1e-12);
  EXPECT_TRUE(r["sign_a"].is_null());
  EXPECT_TRUE(r["margin_1"].is_null());
  EXPECT_EQ(j["summary"]["violations"], 1);
  EXPECT_NEAR(j["summary"]["worst_violation"]["margin"].get<double>(), -0.125, 1e-12);
  EXPECT_TRUE(j["summary"]["largest_hold_margin"].is_null());
}

TEST(Json, EmptyScanIsValid) {
  ScanConfig c;
  c.ranges[0] = AngleRange{1, 1, 0.1, true, false};
  const std::string text = render(c, OutputFormat::json);
  EXPECT_EQ(text.back(), '\n');
  const nlohmann::json j = nlohmann::json::parse(text);
  EXPECT_TRUE(j["records"].empty());
  EXPECT_EQ(j["summary"]["total_points"], 0);
}

TEST(EmitProperty, CsvAndJsonAgree) {
  ScanConfig c;
  c.kind = CheckKind::matrix;
  c.signs = {Sign::plus, Sign::minus, Sign::plus};
  for (auto& r : c.ranges) r.step = kPi / 9;
  const auto lines = split(render(c, OutputFormat::csv), '\n');
  const nlohmann::json j = nlohmann::json::parse(render(c, OutputFormat::json));
  const auto& recs = j["records"];
  ASSERT_EQ(lines.size(), recs.size() + 2);
  const auto header = split(kCsvHeader, ',');
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto f = split(lines[i + 1], ',');
    ASSERT_EQ(f.size(), header.size());
    for (std::size_t k = 0; k < header.size(); ++k) {
      const auto& v = recs[i][header[k]];
      if (v.is_null()) {
        EXPECT_EQ(f[k], "");
      } else if (v.is_number()) {
        // Both sides print with 17 digits, so they round-trip to the same double.
        EXPECT_EQ(std::stod(f[k]), v.get<double>());
      } else if (v.is_boolean()) {
        EXPECT_EQ(f[k], v.get<bool>() ? "true" : "false");
      } else {
        EXPECT_EQ(f[k], v.get<std::string>());
      }
    }
  }
}

TEST(EmitProperty, ByteIdenticalAcrossRunsAndThreads) {
  ScanConfig c;
  c.kind = CheckKind::entropic;
  for (auto& r : c.ranges) r.step = kPi / 12;
  for (OutputFormat f : {OutputFormat::csv, OutputFormat::json}) {
    const std::string a = render(c, f, 1);
    EXPECT_EQ(a, render(c, f, 1));
    EXPECT_EQ(a, render(c, f, 4));
  }
}

TEST(Emit, StreamFailureRaisesIoError) {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  const ScanResult r = collect_scan(wigner_point(), 1);
  EXPECT_THROW(emit(wigner_point(), r.records, r.summary, OutputFormat::csv, out), IoError);
  EXPECT_THROW(emit(wigner_point(), r.records, r.summary, OutputFormat::json, out), IoError);
}

TEST(VerdictJson, CarriesEntropyExtras) {
  const nlohmann::json j = nlohmann::json::parse(verdict_json(check_entropy(kPi / 2, 0, kPi)));
  EXPECT_EQ(j["kind"], "entropic");
  EXPECT_NEAR(j["lhs"].get<double>(), std::log(2.0), 1e-12);
  EXPECT_TRUE(j.contains("lhs_thermo_j_per_k"));
  EXPECT_EQ(j["signs"].size(), 3u);
}

}  // namespace
}  // namespace ebell
