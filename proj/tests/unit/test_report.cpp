#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lfock/report.hpp"

using namespace lfock;

namespace {

std::vector<ReportRow> sample() {
  return {make_row("b", "second", 1.0 / 3.0, 0.3333333, Provenance::Derived, 1e-6),
          make_row("a", "first", 2.0, 2.0, Provenance::Paper, 1e-12, true),
          info_row("b", "alpha", 0.125)};
}

}  // namespace

TEST_CASE("row pass logic") {
  CHECK(make_row("s", "q", 1.0, 1.1, Provenance::Trivial, 0.2).pass);
  CHECK_FALSE(make_row("s", "q", 1.0, 1.1, Provenance::Trivial, 0.05).pass);
  CHECK(make_row("s", "q", 100.0, 101.0, Provenance::Trivial, 0.02, true).pass);
  CHECK_FALSE(make_row("s", "q", NAN, 1.0, Provenance::Trivial, 1.0).pass);
  CHECK(info_row("s", "q", 3.0).pass);
  CHECK_FALSE(info_row("s", "q", INFINITY).pass);
}

TEST_CASE("CSV formatting") {
  const std::string csv = format_table(sample(), TableFormat::Csv);
  std::istringstream in(csv);
  std::string header, l1, l2, l3;
  std::getline(in, header);
  std::getline(in, l1);
  std::getline(in, l2);
  std::getline(in, l3);
  CHECK(header.find("suite") == 0);
  CHECK(l1.rfind("a,first [rel],", 0) == 0);
  CHECK(l2.find("alpha") != std::string::npos);
  CHECK(l3.find("second") != std::string::npos);
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
  CHECK(format_table(sample(), TableFormat::Csv) == csv);
}

TEST_CASE("JSON formatting") {
  const auto j = nlohmann::json::parse(format_table(sample(), TableFormat::Json));
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0]["suite"] == "a");
  CHECK(j[1]["target"].is_null());
  std::istringstream in(format_table(sample(), TableFormat::Csv));
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines - 1 == static_cast<int>(j.size()));
}

TEST_CASE("emitting tables") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "lfock_report_test.csv";
  std::filesystem::remove(path);
  CHECK_THROWS(emit_table({}, TableFormat::Csv, path.string()));
  CHECK_FALSE(std::filesystem::exists(path));
  emit_table(sample(), TableFormat::Csv, path.string());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == format_table(sample(), TableFormat::Csv));
  std::filesystem::remove(path);
  CHECK(all_pass(sample()));
}

TEST_CASE("CSV quoting") {
  const auto csv = format_table({make_row("s", "a,b \"x\"", 1.0, 1.0, Provenance::Trivial, 0.0)}, TableFormat::Csv);
  CHECK(csv.find("\"a,b \"\"x\"\"\"") != std::string::npos);
}
