#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "trigstrata/json_io.hpp"

#include "support/gen.hpp"

using namespace trigstrata;

TEST_CASE("form JSON round trip") {
  tsgen::Rng rng(601);
  for (int trial = 0; trial < 20; ++trial) {
    const TrigonalForm f = tsgen::random_form(1 + trial % 3, rng, 5, 3);
    CHECK(form_from_json(form_to_json(f)) == f);
  }
  CHECK_THROWS_AS(form_from_json(json{{"k", 1}}), input_error);
  CHECK_THROWS_AS(form_from_json(json::parse(R"({"k":1,"s":"1","r":["0","0","0","0"],)"
                                             R"("p":["0","0","0","0","0"],)"
                                             R"("q":["0","0","0","0","0","0","0"]})")),
                  input_error);
}

TEST_CASE("group element JSON round trip") {
  tsgen::Rng rng(607);
  for (int trial = 0; trial < 20; ++trial) {
    const GElement g = tsgen::random_gelement(1 + trial % 3, rng);
    const GElement back = gelement_from_json(gelement_to_json(g));
    CHECK(back == g);
  }
  CHECK_THROWS_AS(gelement_from_json(json{{"a", "1"}}), input_error);
}

TEST_CASE("transform log JSON round trip replays identically") {
  tsgen::Rng rng(613);
  const TrigonalForm moved = act(tsgen::random_gelement(1, rng), tsgen::seed_two_point(1));
  const NormalizeResult res = normalize_two_point(moved);
  const TransformLog back = log_from_json(log_to_json(res.log));
  CHECK(replay(back, moved) == res.form);
  CHECK(log_to_json(back) == log_to_json(res.log));
}

TEST_CASE("presentation JSON carries the advertised fields") {
  const json j = presentation_to_json(build_piK(5));
  CHECK(j["generators"] == 8);
  CHECK(j["conjectural"] == false);
  CHECK(j["relations"].size() == 34);
  CHECK(j["relations"][0][0].size() == 3);
  CHECK(j["family"].get<std::string>().find("piK") != std::string::npos);
}

#ifdef TRIGSTRATA_CLI_PATH

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TRIGSTRATA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const json& j) {
  const std::string path = "/tmp/trigstrata_test_" + name + ".json";
  std::ofstream out(path);
  out << j.dump();
  return path;
}

}  // namespace

TEST_CASE("CLI classify") {
  const std::string path = write_temp("onepoint", form_to_json(tsgen::seed_one_point(1)));
  const CliResult res = run_cli("classify --input " + path);
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["regular"] == true);
  CHECK(j["genus"] == 4);
  CHECK(j["spin"] == "even");
  CHECK(j["stratum"]["kind"] == "one_point");
  CHECK(j["stratum"]["signature"] == json::array({6}));
  CHECK(j["l0"]["distinct_points"] == 1);

  // non-regular input: domain error exit code
  TrigonalForm cusp = zero_form(1);
  cusp.s = 1;
  cusp.q[5] = 1;
  const std::string bad = write_temp("cusp", form_to_json(cusp));
  const CliResult res2 = run_cli("classify --input " + bad);
  CHECK(res2.exit_code == 2);
  CHECK(json::parse(res2.out)["regular"] == false);

  // malformed input: exit 1
  std::ofstream(std::string("/tmp/trigstrata_test_broken.json")) << "{ not json";
  const CliResult res3 = run_cli("classify --input /tmp/trigstrata_test_broken.json");
  CHECK(res3.exit_code == 1);
  CHECK(json::parse(res3.out).contains("error"));
}

TEST_CASE("CLI normalize emits a replayable log") {
  tsgen::Rng rng(617);
  const TrigonalForm moved = act(tsgen::random_gelement(1, rng), tsgen::seed_two_point(1));
  const std::string path = write_temp("two", form_to_json(moved));
  const CliResult res = run_cli("normalize --input " + path);
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.out);
  CHECK(j["slice"] == "V2");
  const TrigonalForm form = form_from_json(j["form"]);
  const TransformLog log = log_from_json(j["log"]);
  CHECK(replay(log, moved) == form);
  CHECK(form_from_json(form_to_json(form)) == form);  // emitted form re-validates

  // deterministic output: byte-identical reruns
  const CliResult res2 = run_cli("normalize --input " + path);
  CHECK(res.out == res2.out);
}

TEST_CASE("CLI orbit-equal, act, embed-base, dims, presentation") {
  tsgen::Rng rng(619);
  const TrigonalForm seed = tsgen::seed_three_point(1);
  const GElement g = tsgen::random_gelement(1, rng);
  const std::string f1 = write_temp("orb1", form_to_json(seed));
  const std::string f2 = write_temp("orb2", form_to_json(act(g, seed)));
  const CliResult eq = run_cli("orbit-equal --first " + f1 + " --second " + f2);
  REQUIRE(eq.exit_code == 0);
  CHECK(json::parse(eq.out)["equal"] == true);

  const std::string ge = write_temp("gel", gelement_to_json(g));
  const CliResult acted = run_cli("act --element " + ge + " --input " + f1);
  REQUIRE(acted.exit_code == 0);
  CHECK(form_from_json(json::parse(acted.out)) == act(g, seed));

  const CliResult emb = run_cli("embed-base --k 1 --p 0 --q 1");
  REQUIRE(emb.exit_code == 0);
  CHECK(form_from_json(json::parse(emb.out)) == seed);

  const CliResult dim = run_cli("dims --k 1");
  REQUIRE(dim.exit_code == 0);
  CHECK(json::parse(dim.out) == json::array({7, 8, 7}));
  CHECK(run_cli("dims --k 0").exit_code == 2);

  const CliResult pres = run_cli("presentation --family piK --n 5 --abelianization --central-word");
  REQUIRE(pres.exit_code == 0);
  const json pj = json::parse(pres.out);
  CHECK(pj["generators"] == 8);
  CHECK(pj["abelianization"]["free_rank"] == 1);
  CHECK(pj["abelianization"]["torsion"].empty());
  CHECK(pj["central_word"]["length"] == 120);

  // the central word is only defined along the n = 3k+2 family
  CHECK(run_cli("presentation --family piK --n 4 --central-word").exit_code == 2);
  CHECK(run_cli("presentation --family nonsense --n 4").exit_code == 1);
}

#endif  // TRIGSTRATA_CLI_PATH
