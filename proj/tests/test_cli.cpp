#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cubepaths/cli.hpp"
#include "cubepaths/json_io.hpp"

using namespace cubepaths;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("boundary subcommand") {
  CliRun r = run({"boundary", "--n", "2", "--set", "[[],[1]]", "--kind", "edge"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("size") == 2);
  CHECK(j.at("kind") == "edge");
  CHECK(j.at("directed") == false);

  CliRun listed = run({"boundary", "--n", "2", "--set", "[[],[1]]", "--kind", "vertex",
                       "--directed", "--list"});
  REQUIRE(listed.exit_code == 0);
  Json jl = Json::parse(listed.out);
  CHECK(jl.at("size") == 2);
  CHECK(jl.at("vertices") == Json::parse("[[2],[1,2]]"));

  CliRun hex = run({"boundary", "--n", "2", "--set", "[\"0x0\",\"0x1\"]"});
  REQUIRE(hex.exit_code == 0);
  CHECK(Json::parse(hex.out).at("size") == 2);

  CliRun shadow = run({"boundary", "--n", "3", "--set", "[[1,2]]", "--kind", "shadow",
                       "--list"});
  REQUIRE(shadow.exit_code == 0);
  CHECK(Json::parse(shadow.out).at("vertices") == Json::parse("[[1],[2]]"));
}

TEST_CASE("boundary subcommand rejects bad input") {
  CHECK(run({"boundary", "--n", "2", "--set", "[[3]]"}).exit_code == 2);
  CHECK(run({"boundary", "--n", "2", "--set", "not json"}).exit_code == 2);
  CHECK(run({"boundary", "--n", "2", "--set", "[[1]]", "--kind", "bogus"}).exit_code == 2);
  CHECK(run({"boundary", "--n", "2"}).exit_code == 2);  // missing --set
  CHECK(run({"nosuchcommand"}).exit_code == 2);
  CliRun bad = run({"boundary", "--n", "2", "--set", "[[3]]"});
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("compress subcommand") {
  std::string input =
      R"({"n":3,"A":[[]],"B":[[1,2,3]],"S":[[],[1,2]],"mode":"edge"})";
  CliRun r = run({"compress", "--json", input});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("trace").size() == 3);
  for (const auto& step : j.at("trace")) {
    CHECK(step.at("after").get<std::uint64_t>() <= step.at("before").get<std::uint64_t>());
  }
  // Output parses back into a valid sandwiched down-set.
  CHECK(j.at("S_prime").is_array());
  CHECK(member_list_from_json(j.at("S_prime"), 3).size() >= 1);
}

TEST_CASE("paths subcommand") {
  std::string input = R"({"n":2,"A":[[]],"B":[[1,2]],"mode":"edge","directed":true})";
  CliRun r = run({"paths", "--json", input});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("count") == 2);
  CHECK(j.at("paths").size() == 2);
  CHECK(j.at("paths") == Json::parse("[[[],[1],[1,2]],[[],[2],[1,2]]]"));
  CHECK(j.at("cut").at("size") == 2);

  CliRun deterministic = run({"paths", "--json", input});
  CHECK(deterministic.out == r.out);

  CHECK(run({"paths", "--json", R"({"n":2,"A":[],"B":[[1]]})"}).exit_code == 2);
  CHECK(run({"paths"}).exit_code == 2);  // no input given
}

TEST_CASE("bounds subcommand") {
  CliRun b = run({"bounds", "b", "--n", "4", "--x", "5"});
  REQUIRE(b.exit_code == 0);
  Json jb = Json::parse(b.out);
  CHECK(jb.at("value") == "6");
  CHECK(jb.at("rational") == "6/1");

  CliRun s = run({"bounds", "s", "--n", "4", "--x", "5"});
  REQUIRE(s.exit_code == 0);
  CHECK(Json::parse(s.out).at("rational") == "4/1");

  CliRun e = run({"bounds", "e", "--n", "4", "--x", "4"});
  REQUIRE(e.exit_code == 0);
  CHECK(Json::parse(e.out).at("value") == "8");

  CHECK(run({"bounds", "q", "--n", "4", "--x", "5"}).exit_code == 2);
  CHECK(run({"bounds", "e", "--n", "3", "--x", "9"}).exit_code == 2);
}

TEST_CASE("verify subcommand") {
  CliRun r = run({"verify", "--theorem", "diredges", "--n", "3", "--exhaustive"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("diredges n=3 exhaustive: pass") != std::string::npos);
  CHECK(r.out.find("0 failures") != std::string::npos);

  CliRun rnd = run({"verify", "--theorem", "matchings", "--n", "4", "--random", "20",
                    "--seed", "7"});
  REQUIRE(rnd.exit_code == 0);
  CliRun rnd2 = run({"verify", "--theorem", "matchings", "--n", "4", "--random", "20",
                     "--seed", "7"});
  CHECK(rnd.out == rnd2.out);

  CHECK(run({"verify", "--theorem", "nosuch", "--n", "3"}).exit_code == 2);
}

TEST_CASE("verify writes certificates") {
  std::string out_file = "cli_test_certs.jsonl";
  CliRun r = run({"verify", "--theorem", "weakKK", "--n", "3", "--exhaustive", "--out",
                  out_file});
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out_file);
  REQUIRE(in.good());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    Json cert = Json::parse(line);
    CHECK(cert.at("theorem") == "weakKK");
    CHECK(cert.at("verdict") == "pass");
    ++lines;
  }
  CHECK(lines > 0);
  std::remove(out_file.c_str());
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).exit_code == 0);
  CHECK(run({}).exit_code == 2);  // a subcommand is required
}
