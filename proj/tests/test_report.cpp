#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "addlab/report.hpp"
#include "testutil.hpp"

using namespace addlab;
using nlohmann::json;

TEST_CASE("format_double: 17 significant digits round-trip exactly") {
  auto rng = testutil::make_rng(61);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double v = uni(rng) * std::pow(10.0, int(uni(rng) * 30));
    const std::string text = format_double(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(std::nan("")) == "null");
}

TEST_CASE("JsonWriter: nesting and escaping") {
  JsonWriter w;
  w.begin_object();
  w.field("name", "a\"b\\c\n");
  w.begin_array("xs");
  w.value(1);
  w.value(2.5);
  w.null_value();
  w.end_array();
  w.key("inner").begin_object().field("flag", true).end_object();
  w.end_object();
  const json j = json::parse(w.str());
  CHECK(j["name"] == "a\"b\\c\n");
  CHECK(j["xs"][0] == 1);
  CHECK(j["xs"][1] == 2.5);
  CHECK(j["xs"][2].is_null());
  CHECK(j["inner"]["flag"] == true);
}

TEST_CASE("construction spec: JSON round-trip") {
  ConstructionSpec spec;
  spec.family = Family::Parthasarathy;
  spec.d = 4;
  spec.lambdas = std::vector<Complex>{{0.1, 0.0}, {0.2, 0.3}};
  const ConstructionSpec back = construction_spec_from_json(construction_spec_json(spec));
  CHECK(back.family == spec.family);
  CHECK(back.d == spec.d);
  REQUIRE(back.lambdas.has_value());
  CHECK(back.lambdas->size() == 2);
  CHECK((*back.lambdas)[1] == Complex(0.2, 0.3));

  ConstructionSpec sub;
  sub.family = Family::AntisymmetricSubspace;
  sub.d = 8;
  sub.n = 26;
  const ConstructionSpec back2 = construction_spec_from_json(construction_spec_json(sub));
  CHECK(back2.n == 26);
  CHECK_FALSE(back2.lambdas.has_value());
}

TEST_CASE("region scan payloads: CSV layout and JSON agreement") {
  const RegionScan scan = region_scan(Family::AntisymmetricSubspace, {3.0}, {6, 7, 8, 9, 10});
  const std::string csv = region_scan_csv(scan);
  CHECK(csv.find("# addlab region-scan\n") == 0);
  CHECK(csv.find("# d0[p=3]=7\n") != std::string::npos);
  CHECK(csv.find("family,p,d,member,n_or_x0,C,c,margin\n") != std::string::npos);

  const json j = json::parse(region_scan_json(scan));
  REQUIRE(j["rows"].size() == 5);
  int csv_rows = 0;
  std::istringstream stream(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    ++csv_rows;
  }
  CHECK(csv_rows == 5);
  // rows are p-major then d, matching the requested grids
  for (std::size_t i = 0; i < j["rows"].size(); ++i)
    CHECK(j["rows"][i]["d"] == 6 + int(i));
}

TEST_CASE("witness report payload carries the full chain") {
  OracleConfig cfg;
  cfg.restarts = 4;
  cfg.max_iterations = 80;
  const WitnessReport rep =
      witness_report({Family::AntisymmetricFull, 4, 0, std::nullopt}, RenyiOrder(3.0), cfg);
  const json j = json::parse(witness_report_json(rep));
  CHECK(j["spec"]["family"] == "antisym");
  CHECK(j["p"] == 3.0);
  CHECK(j["links"].size() == 3);
  CHECK(j["analytic"].contains("margin"));
  CHECK(j["numericSingleCopy"]["boundDirection"] == "upper-estimate-of-infimum");
  CHECK(j["compositeWitnessEntropy"].get<double>() ==
        doctest::Approx(rep.composite_witness_entropy).epsilon(1e-15));
}
