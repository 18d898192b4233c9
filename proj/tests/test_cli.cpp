// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vacsep/cli.hpp"

using namespace vacsep;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("vacsep_test_" + name);
}

}  // namespace

TEST_CASE("parse_values") {
  CHECK(cli::parse_values("1.5") == std::vector<double>{1.5});
  CHECK(cli::parse_values("0:1:3") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(cli::parse_values("2:2:1") == std::vector<double>{2.0});
  CHECK(cli::parse_values("1,2,0:1:2") == std::vector<double>{1.0, 2.0, 0.0, 1.0});
  CHECK_THROWS_AS(cli::parse_values(""), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_values("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_values("1:2:0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_values("abc"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_values("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_values("nan"), std::invalid_argument);
}

TEST_CASE("format_number keeps 17 significant digits") {
  CHECK(cli::format_number(-0.25) == "-0.25");
  CHECK(cli::format_number(0.1) == "0.10000000000000001");
  CHECK(cli::format_number(1e-20) == "9.9999999999999995e-21");
  for (double v : {1.0 / 3.0, -6.3325739776461107e-3, 123456.789})
    CHECK(std::stod(cli::format_number(v)) == v);
}

TEST_CASE("scan at the coincidence geometry") {
  const Outcome o = invoke({"scan", "--z", "1", "--zprime", "1", "--r", "0", "--L", "0.1"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == cli::kScanCsvHeader);
  CHECK(rows[1] == "0,1,1,0.10000000000000001,-0.25,-0.25,separable,true");
}

TEST_CASE("scan accepts flags before the subcommand and ranges") {
  const Outcome o = invoke({"--z", "1:2:2", "--zprime", "1,2", "--r", "0:1:2", "scan", "--L", "0.1"});
  CHECK(o.code == 0);
  CHECK(lines(o.out).size() == 9);
}

TEST_CASE("scan JSON layout") {
  const Outcome o = invoke({"scan", "--z", "1", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "subcommand", "inputs", "records",
                                         "diagnostics"});
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["subcommand"] == "scan");
  CHECK(doc["records"][0]["F_expanded"] == -0.25);
  CHECK(doc["records"][0]["max_flag"] == true);
}

TEST_CASE("casimir") {
  const Outcome o = invoke({"casimir", "--z", "1"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("1,-0.006332573977646", 0) == 0);
}

TEST_CASE("components reports smeared entries when the boxes are disjoint") {
  const Outcome o = invoke({"components", "--z", "1", "--zprime", "2", "--nodes", "4"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "r,z,zprime,L,a,b,aprime,bprime,c,d,c_smeared,d_smeared");
  CHECK(rows[1].back() != ',');
  const Outcome same = invoke({"components", "--z", "1"});
  CHECK(same.code == 0);
  CHECK(lines(same.out)[1].substr(lines(same.out)[1].size() - 2) == ",,");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"scan", "casimir"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"scan", "--format", "xml"}).code == 2);
  CHECK(invoke({"scan", "--z", "1:2"}).code == 2);
  const Outcome neg = invoke({"scan", "--z", "-1"});
  CHECK(neg.code == 2);
  CHECK(neg.err.find("--z") != std::string::npos);
  CHECK(invoke({"scan", "--z", "0.01", "--L", "0.1"}).code == 2);
  CHECK(invoke({"components", "--z", "1", "--L", "5"}).code == 2);
  CHECK(invoke({"oracle-lattice", "--z", "0.5"}).code == 2);
  CHECK(invoke({"verify", "--samples", "0"}).code == 2);
}

TEST_CASE("help exits with 0") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("find-max") != std::string::npos);
}

TEST_CASE("config file presets flags and command-line flags win") {
  const auto cfg = temp_file("preset.ini");
  {
    std::ofstream f(cfg);
    f << "z = 2\nzprime = 2\nr = 0\nL = 0.1\nformat = csv\n";
  }
  const Outcome from_file = invoke({"scan", "--config", cfg.string()});
  CHECK(from_file.code == 0);
  CHECK(lines(from_file.out)[1].rfind("0,2,2,0.10000000000000001,", 0) == 0);
  const Outcome overridden = invoke({"scan", "--config", cfg.string(), "--z", "3"});
  CHECK(overridden.code == 0);
  CHECK(lines(overridden.out)[1].rfind("0,3,2,", 0) == 0);
  std::filesystem::remove(cfg);
  CHECK(invoke({"scan", "--config", cfg.string()}).code == 2);
}

TEST_CASE("--out writes the file and nothing to the stream") {
  const auto path = temp_file("out.csv");
  const Outcome o = invoke({"scan", "--z", "1", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == cli::kScanCsvHeader);
  std::filesystem::remove(path);
  CHECK(invoke({"scan", "--z", "1", "--out", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("find-max over a region") {
  const Outcome o = invoke({"find-max", "--z", "0.5:2:2", "--zprime", "0.5:2:2", "--r", "0:2:2",
                            "--L", "0.1", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["records"][0]["F"].get<double>() == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("oracle-momentum at one distance") {
  const Outcome o = invoke({"oracle-momentum", "--z", "1", "--zprime", "1"});
  REQUIRE(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  REQUIRE(doc["records"].size() == 2);
  CHECK(doc["records"][0]["R"] == 2.0);
  CHECK(std::abs(doc["records"][1]["relative_error"].get<double>()) < 1e-3);
}
