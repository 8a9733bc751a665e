#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "g2/cli.hpp"
#include "g2/rational.hpp"

using namespace g2;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "g2tool");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify identities") {
  const auto r = invoke({"verify", "identities", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("verify identities: pass\n", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto j = invoke({"--format", "json", "verify", "identities"});
  CHECK(j.code == 0);
  const Report rep = report_from_json(j.out);
  CHECK(rep.status == ReportStatus::pass);
  CHECK(rep.details.size() == 16);
}

TEST_CASE("verify nearly-g2 records the conventions") {
  const auto r = invoke({"verify", "nearly-g2", "--format", "json"});
  CHECK(r.code == 0);
  const Report rep = report_from_json(r.out);
  REQUIRE(rep.find("nearly_g2.dphi_equals_4psi") != nullptr);
  CHECK(*rep.find("nearly_g2.dphi_equals_4psi")->passed);
  CHECK(rep.find("nearly_g2.convention")->value == "opposite");
  CHECK(rep.find("nearly_g2.orientation")->value == "negative");
}

TEST_CASE("decompose") {
  const auto r = invoke({"decompose", "--degree", "3", "--form", "e123", "--format", "json"});
  CHECK(r.code == 0);
  const Report rep = report_from_json(r.out);
  CHECK(rep.find("f")->value == "1/7");
  CHECK(rep.find("X")->value == "0");
  CHECK(rep.find("reconstruction.residual")->value == "0");
  CHECK(*rep.find("sigma27.in_omega3_27")->passed);

  const auto two = invoke({"decompose", "--degree", "2", "--form", "e12 + 1/2 e34", "--format", "json"});
  CHECK(two.code == 0);
  const Report rep2 = report_from_json(two.out);
  CHECK(rep2.status == ReportStatus::pass);
  CHECK(rep2.find("reconstruction.residual")->value == "0");
}

TEST_CASE("usage and parse errors exit with 2") {
  const auto bad = invoke({"decompose", "--degree", "3", "--form", "e12 + e345"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 6") != std::string::npos);

  const auto garbage = invoke({"decompose", "--degree", "2", "--form", "e1x"});
  CHECK(garbage.code == 2);
  CHECK(garbage.err.find("offset") != std::string::npos);

  CHECK(invoke({"decompose", "--degree", "4", "--form", "e1234"}).code == 2);
  CHECK(invoke({"verify", "identities", "--bogus"}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"obstruction", "--stage", "Q"}).code == 2);
  CHECK(invoke({"verify", "identities", "--format", "yaml"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("obstruction pairing prints an exact rational") {
  const auto r = invoke({"obstruction", "--stage", "pairing"});
  CHECK(r.code == 0);
  CHECK(r.out.find("  pairing = 95/4\n") != std::string::npos);
  const auto j = invoke({"obstruction", "--stage", "pairing", "--format", "json"});
  const Report rep = report_from_json(j.out);
  CHECK(rep.status == ReportStatus::value);
  CHECK(parse_rational(rep.find("pairing")->value) == frac(95, 4));
}

TEST_CASE("text and json agree on every value") {
  const auto t = invoke({"obstruction", "--stage", "all"});
  const auto j = invoke({"obstruction", "--stage", "all", "--format", "json"});
  CHECK(t.code == 0);
  const Report rep = report_from_json(j.out);
  CHECK(rep.find("P.ratio_to_display")->value == "5");
  CHECK(rep.find("P.invariant_remainder")->value == "0");
  for (const auto& d : rep.details) {
    CAPTURE(d.name);
    CHECK(t.out.find("  " + d.name + " = " + d.value + "\n") != std::string::npos);
  }
  // sorted by name
  for (std::size_t i = 1; i < rep.details.size(); ++i) CHECK(rep.details[i - 1].name < rep.details[i].name);
}

TEST_CASE("json round trip and schema") {
  Report r{"verify demo", ReportStatus::value, {}};
  r.add_value("b", "1/3");
  r.add_check({"a", false, "e12", "e12 + e34"});
  r.add_check({"c", true, "0", ""});
  r.finalize();
  CHECK(r.status == ReportStatus::fail);
  CHECK(r.details.front().name == "a");
  const std::string text = to_json(r);
  CHECK(report_from_json(text) == r);
  CHECK(to_json(report_from_json(text)) == text);
  CHECK(text.find("\"counterexample\": \"e12 + e34\"") != std::string::npos);
  CHECK_THROWS_AS(report_from_json("{\"command\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("{\"command\": \"x\", \"status\": \"maybe\", \"details\": []}"),
                  std::invalid_argument);
}

TEST_CASE("--out writes the report") {
  const std::string path = "g2tool_test_report.json";
  const auto r = invoke({"verify", "nearly-g2", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(report_from_json(body).command == "verify nearly-g2");
  std::remove(path.c_str());
  CHECK(invoke({"verify", "identities", "--out", "/nonexistent/dir/report.txt"}).code == 2);
}
