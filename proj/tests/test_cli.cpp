#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nslat/cli.hpp"
#include "support/minischema.hpp"

using nlohmann::ordered_json;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult invoke(const std::vector<std::string> &args) {
  std::vector<const char *> argv{"nslat"};
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = nslat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ordered_json load_schema(const std::string &name) {
  std::ifstream in(std::string(NSLAT_SOURCE_DIR) + "/schemas/" + name + ".json");
  REQUIRE(in.good());
  return ordered_json::parse(in);
}

}  // namespace

TEST_CASE("exists verdict matches its published schema") {
  CliResult r = invoke({"exists", "--m", "1", "--d", "5", "--property", "very-ample", "--json"});
  CHECK(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("exists")));
  CHECK(j["answer"] == false);
  CHECK(j["parameters"]["property"] == "very-ample");
  CHECK(j["branch"].get<std::string>().find("2-torsion") != std::string::npos);

  r = invoke({"exists", "--m", "3", "--d", "4", "--property", "smooth", "--json"});
  ordered_json j2 = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j2, load_schema("exists")));
  CHECK(j2["answer"] == true);
}

TEST_CASE("identical invocations are byte-identical") {
  std::vector<std::string> args{"count", "--m", "2", "--d", "7", "--json"};
  CliResult a = invoke(args), b = invoke(args);
  CHECK(a.out == b.out);
  std::vector<std::string> human{"classify", "--m", "2", "--d", "2"};
  CliResult c = invoke(human), e = invoke(human);
  CHECK(c.out == e.out);
}

TEST_CASE("lists star prints the 21 products and the GRH note") {
  CliResult r = invoke({"lists", "--which", "star", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        "1,2,4,6,10,12,18,22,28,30,42,58,60,70,78,102,130,190,210,330,462");
  CHECK(r.out.find("GRH") != std::string::npos);

  r = invoke({"lists", "--which", "star", "--json"});
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("lists")));
  CHECK(j["values"].size() == 21);
  CHECK(j["notes"].size() == 1);
  CHECK(j["notes"][0].get<std::string>().find("GRH") != std::string::npos);

  r = invoke({"lists", "--which", "p4", "--json"});
  ordered_json p4 = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(p4, load_schema("lists")));
  CHECK(p4["values"].size() == 25);
  CHECK(p4["parameters"]["bound"] == 400);
}

TEST_CASE("pr2 reproduces the divisor-count example") {
  CliResult r = invoke({"pr2", "--d", "7", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out == "d: 7\nN = 2\nN_sm = 0\nN_va = 0\n");

  r = invoke({"pr2", "--d", "12", "--json"});
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("pr2")));
  CHECK(j["total"] == 6);
  CHECK(j["smooth"] == 4);
  CHECK(j["very_ample"] == 2);
}

TEST_CASE("classgroup lists the reduced classes of a discriminant") {
  CliResult r = invoke({"classgroup", "-20", "--json"});
  CHECK(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("classgroup")));
  CHECK(j["h"] == 2);
  CHECK(j["h_plus"] == 2);
  CHECK(j["h2"] == 2);
  CHECK(j["classes"] == ordered_json::parse("[[1,0,5],[2,2,3]]"));

  r = invoke({"classgroup", "-20", "--quiet"});
  CHECK(r.out.find("h: 2") != std::string::npos);
  CHECK(r.out.find("[2, 2, 3]") != std::string::npos);
}

TEST_CASE("count picks the closed form in regime and the oracle outside it") {
  CliResult r = invoke({"count", "--m", "1", "--d", "5", "--json"});
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("count")));
  CHECK(j["method"] == "formula");
  CHECK(j["total"] == 2);
  CHECK(j["smooth"] == 1);
  CHECK(j["very_ample"] == 0);

  r = invoke({"count", "--m", "2", "--d", "2", "--json"});
  j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("count")));
  CHECK(j["method"] == "oracle");
  CHECK(j["total"] == 3);
  CHECK(j["nonsmooth"] == 2);

  r = invoke({"count", "--m", "1", "--d", "5", "--oracle", "--json"});
  j = ordered_json::parse(r.out);
  CHECK(j["method"] == "oracle");
  CHECK(j["total"] == 2);
}

TEST_CASE("classify emits one record per orbit") {
  CliResult r = invoke({"classify", "--m", "2", "--d", "7", "--json"});
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("classify")));
  CHECK(j["total"] == 3);
  CHECK(j["very_ample"] == 1);
  CHECK(j["orbits"].size() == 3);
  for (const auto &o : j["orbits"]) CHECK(o["rep"]["m"] == 2);
}

TEST_CASE("verify exits clean and validates when every check passes") {
  CliResult r = invoke({"verify", "--m-max", "3", "--d-max", "3", "--json"});
  CHECK(r.code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK_NOTHROW(minischema::validate(j, load_schema("verify")));
  CHECK(j["all_pass"] == true);
  CHECK(j["cells"].size() > 0);

  r = invoke({"verify", "--m-max", "2", "--d-max", "2", "--quiet"});
  CHECK(r.code == 0);
  CHECK(r.out.find("failures: 0") != std::string::npos);
  CHECK(r.out.find("all_pass: true") != std::string::npos);
}

TEST_CASE("exit codes separate usage errors from guard trips") {
  CliResult r = invoke({"count", "--m", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--d") != std::string::npos);

  r = invoke({"frobnicate"});
  CHECK(r.code == 1);

  r = invoke({"exists", "--m", "0", "--d", "5", "--property", "smooth"});
  CHECK(r.code == 1);

  r = invoke({"verify", "--m-max", "101", "--d-max", "100"});
  CHECK(r.code == 3);
  CHECK(r.err.find("guard") != std::string::npos);

  r = invoke({"exists", "--m", "4000000000000000000", "--d", "6", "--property", "very-ample"});
  CHECK(r.code == 3);

  r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classgroup") != std::string::npos);
}

TEST_CASE("the version header is a separate line and --quiet removes it") {
  CliResult r = invoke({"pr2", "--d", "7"});
  CHECK(r.out.substr(0, r.out.find('\n')) == "nslat 1.0.0");
  r = invoke({"pr2", "--d", "7", "--quiet"});
  CHECK(r.out.substr(0, 2) == "d:");
  r = invoke({"pr2", "--d", "7", "--json"});
  CHECK(r.out[0] == '{');
}
