#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "omega/report.hpp"

using namespace omega;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST(Report, FormatDoubleRoundTrips) {
  for (const double v : {0.1, 1.0 / 3.0, -2.447580736233658, 1e-300, 6.02e23, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(parse_format("json"), OutputFormat::json);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Report, CountCsv) {
  CountComparison c;
  c.x = 100;
  c.h = 2;
  c.excluded = {2, 3};
  c.exact = 41;
  c.predicted = 40.5;
  c.residual = 0.5;
  c.normalized_residual = 0.025;
  std::ostringstream out;
  write_counts(out, std::vector<CountComparison>{c}, OutputFormat::csv);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], kCountCsvHeader);
  EXPECT_EQ(ls[1], "100,2,2;3,41,40.5,0.5,0.025");
}

TEST(Report, MomentJsonLines) {
  MomentReport a;
  a.x = 100;
  a.h = 2;
  a.population = Population::h_full;
  a.exact_sum = 16;
  a.predicted = 15.25;
  a.residual = 0.75;
  a.theorem = "h-full omega moments";
  MomentReport b = a;
  b.exact_sum = (static_cast<u128>(1) << 70) + 5;
  std::ostringstream out;
  write_moments(out, std::vector<MomentReport>{a, b}, OutputFormat::json);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 2u);
  const json j = json::parse(ls[0]);
  EXPECT_EQ(j["exact"].get<std::uint64_t>(), 16u);
  EXPECT_EQ(j["population"], "h-full");
  EXPECT_EQ(j["statistic"], "omega");
  EXPECT_EQ(j["theorem"], "h-full omega moments");
  EXPECT_DOUBLE_EQ(j["predicted"].get<double>(), 15.25);
  EXPECT_EQ(json::parse(ls[1])["exact"], "1180591620717411303429");
}

TEST(Report, MomentCsvHeader) {
  std::ostringstream out;
  write_moments(out, std::vector<MomentReport>{MomentReport{}}, OutputFormat::csv);
  EXPECT_EQ(lines(out.str())[0], kMomentCsvHeader);
}

TEST(Report, ConstantsJson) {
  ConstantValue v{"C1", 2, -0.0687, 9999991, 1e-15};
  std::ostringstream out;
  write_constants(out, std::vector<ConstantValue>{v}, OutputFormat::json);
  const json j = json::parse(out.str());
  EXPECT_EQ(j["name"], "C1");
  EXPECT_EQ(j["h"], 2);
  EXPECT_EQ(j["truncation_prime"], 9999991);
  EXPECT_DOUBLE_EQ(j["tail_bound"].get<double>(), 1e-15);
  std::ostringstream csv;
  write_constants(csv, std::vector<ConstantValue>{v}, OutputFormat::csv);
  EXPECT_EQ(lines(csv.str())[0], kConstantCsvHeader);
}

TEST(Report, VarianceAndConcentration) {
  VarianceReport v;
  v.x = 1000;
  v.h = 2;
  v.excluded_count = 1;
  ConcentrationReport c;
  c.x = 1000;
  c.h = 2;
  c.parameter = 0.5;
  c.exceptional_count = 3;
  c.population_count = 40;
  c.fraction = 0.075;
  std::ostringstream a, b;
  write_variance(a, std::vector<VarianceReport>{v}, OutputFormat::csv);
  write_concentration(b, std::vector<ConcentrationReport>{c}, OutputFormat::json);
  EXPECT_EQ(lines(a.str())[0], kVarianceCsvHeader);
  const json j = json::parse(b.str());
  EXPECT_EQ(j["mode"], "epsilon");
  EXPECT_EQ(j["exceptional_count"], 3);
  EXPECT_DOUBLE_EQ(j["fraction"].get<double>(), 0.075);
}
