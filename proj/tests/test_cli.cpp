#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "strata/cli.hpp"

using namespace strata;
using ojson = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"classes", "--case", "B", "--m", "3"}).code == 0);
  CHECK(run({"classes", "--case", "B", "--m", "0"}).code == 2);
  CHECK(run({"classes", "--case", "E", "--m", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classes", "--bogus"}).code == 2);
  CHECK(run({"stratum-table"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify-theorems", "--case", "all", "--m-range", "2..4"}).code == 0);
  CHECK(run({"verify-theorems", "--case", "B", "--m-range", "4..2"}).code == 2);
  auto bad = run({"verify-theorems", "--case", "B", "--m-range", "2..3", "--profile", "w0=Antidiagonal"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors go to the error stream") {
  auto r = run({"frobnicate"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("json output round trips byte for byte") {
  const std::vector<std::vector<std::string>> cmds{
      {"classes", "--case", "B", "--m", "4"},
      {"classes", "--case", "Dtwisted", "--m", "3"},
      {"final-elements", "--case", "D", "--m", "3"},
      {"colength", "--case", "B", "--m", "3", "--index", "1"},
      {"shuffle", "--element", "B3:[6,1,3]"},
      {"degrees", "--case", "B", "--m", "3"},
      {"count", "--variant", "nonsplit", "--dim", "4", "--p", "3"},
      {"stratum-table", "--n", "9"},
      {"verify-theorems", "--case", "D", "--m-range", "2..3"},
      {"fzip-roundtrip", "--p", "3", "--n", "5", "--samples", "5"}};
  for (auto cmd : cmds) {
    cmd.push_back("--format");
    cmd.push_back("json");
    auto r = run(cmd);
    CAPTURE(cmd[0]);
    CHECK(r.code == 0);
    auto j = ojson::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j.at("verb") == cmd[0]);
    CHECK(j.at("ok") == true);
    CHECK(j.at("rows").is_array());
  }
}

TEST_CASE("classes in rank 10") {
  auto r = run({"classes", "--case", "B", "--m", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = ojson::parse(r.out);
  const auto& rows = j.at("rows");
  REQUIRE(rows.size() == 20);
  CHECK(rows[1].at("coeff_poly") == ojson::array({"-1/1", "1/1"}));
  CHECK(rows[10].at("lambda_power") == 10);
  CHECK(rows[19].at("lambda_power") == 19);
  for (size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].at("index") == i + 1);
}

TEST_CASE("csv and text formats") {
  auto c = run({"classes", "--case", "B", "--m", "2", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 5);
  auto t = run({"classes", "--case", "B", "--m", "2"});
  CHECK(t.out.find("result: pass") != std::string::npos);
  CHECK(run({"classes", "--case", "B", "--m", "2", "--format", "yaml"}).code == 2);
}

TEST_CASE("stratum tables") {
  auto rows = stratum_table(21, Case::Bodd);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0].label == "height 1");
  CHECK(rows[9].label == "height 10");
  CHECK(rows[10].label == "supersingular, artin 10");
  CHECK(rows[19].label == "artin 1");
  CHECK(rows[10].cls.coeff == closed_form(Case::Bodd, 10, 11).coeff);

  // twisted, m = 6: row m+1 is the empty stratum
  auto tw = stratum_table(12, Case::Dtwisted);
  REQUIRE(tw.size() == 12);
  CHECK(tw[6].label == "empty");
  CHECK(tw[6].cls.coeff.is_zero());
  CHECK(tw[5].label == "height 6");
  auto un = stratum_table(12, Case::Duntwisted);
  CHECK(un[5].label == "empty");
  CHECK(un[6].label == "artin 6");
  CHECK_THROWS(stratum_table(12, Case::Bodd));
}

TEST_CASE("count reports the closed form next to the enumeration") {
  auto r = run({"count", "--variant", "odd", "--dim", "5", "--p", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = ojson::parse(r.out);
  REQUIRE(j.at("rows").size() == 1);
  CHECK(j.at("rows")[0].at("count") == 40);
}
