#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "nccr/cli.hpp"

using nccr::run_command;
using nlohmann::json;

namespace {

json out_json(const std::vector<std::string>& args) {
  nccr::CliOutcome r = run_command(args);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("singular germ report over the command line") {
  json j = out_json({"mu-tau", "--vars", "x,y", "--poly", "x^2 + y^3"});
  CHECK(j["schema"] == "nccr/1");
  CHECK(j["command"] == "mu-tau");
  CHECK(j["milnor"] == 2);
  CHECK(j["tyurina"] == 2);
  CHECK(j["quasi_homogeneous"] == true);
  CHECK(j["isolated"] == true);
}

TEST_CASE("quiver shortcut prints the four-variable report") {
  json j = out_json({"quiver", "--weights", "1,1,-1,-1"});
  CHECK(j["command"] == "invariants.quiver");
  CHECK(j["vertices"] == 2);
  REQUIRE(j["toric_relations"].size() == 1);
  CHECK(j["toric_relations"][0] == "Y11*Y22 - Y12*Y21");
}

TEST_CASE("output bytes are identical across runs") {
  std::vector<std::string> args = {"invariants", "gorenstein", "--weights", "1,1,-1,-1"};
  nccr::CliOutcome a = run_command(args);
  nccr::CliOutcome b = run_command(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
}

TEST_CASE("timing is opt-in so default output stays stable") {
  nccr::CliOutcome plain =
      run_command({"delpezzo", "surface", "--surface", "P2"});
  CHECK(plain.out.find("timing_ms") == std::string::npos);
  nccr::CliOutcome timed =
      run_command({"delpezzo", "surface", "--surface", "P2", "--timing"});
  CHECK(timed.out.find("timing_ms") != std::string::npos);
}

TEST_CASE("the cone-check spelling is an alias of tilting-check") {
  std::vector<std::string> a = {"delpezzo", "tilting-check", "--surface", "P1xP1",
                                "--L", "1,1", "--collection", "0,0;1,0"};
  std::vector<std::string> b = {"delpezzo", "cone-check", "--surface", "P1xP1",
                                "--L", "1,1", "--collection", "0,0;1,0"};
  nccr::CliOutcome ra = run_command(a);
  nccr::CliOutcome rb = run_command(b);
  CHECK(ra.exit_code == 0);
  CHECK(ra.out == rb.out);
  json j = json::parse(ra.out);
  CHECK(j["command"] == "delpezzo.tilting-check");
  CHECK(j["verdict"] == true);
}

TEST_CASE("five-point vanishing failure is reported with its first witness") {
  json j = out_json({"delpezzo", "cone-check", "--surface", "dP5", "--L",
                     "anticanonical", "--collection", "naive"});
  CHECK(j["verdict"] == false);
  REQUIRE(!j["witnesses"].empty());
  CHECK(j["witnesses"][0]["from"] == 7);
  CHECK(j["witnesses"][0]["to"] == 0);
  CHECK(j["witnesses"][0]["i"] == 1);
  CHECK(j["witnesses"][0]["j"] == 1);
  CHECK(j["witnesses"][0]["dim"] == 1);
}

TEST_CASE("cone properties expose an optional section table") {
  json j = out_json({"delpezzo", "cone-props", "--surface", "dP6", "--L",
                     "anticanonical", "--lc-range", "0:5"});
  CHECK(j["cm"] == true);
  CHECK(j["rational"] == true);
  CHECK(j["gorenstein_index"] == 1);
  CHECK(j["blowup_crepant"] == true);
  auto lc = j["local_cohomology"];
  for (const auto& v : lc["H1_m"]) CHECK(v == 0);
  for (const auto& v : lc["H2_m"]) CHECK(v == 0);
  for (const auto& v : lc["H3_m"]) CHECK(v == 0);
}

TEST_CASE("euler, slope, mutate and cohomology round-trip through text too") {
  json j = out_json({"delpezzo", "euler", "--surface", "P2", "--E", "1:0:0",
                     "--F", "1:1:1/2"});
  CHECK(j["chi"] == 3);

  json s = out_json({"delpezzo", "slope", "--surface", "P2", "--E", "1:1:1/2"});
  CHECK(s["slope"] == "3");

  json m = out_json({"delpezzo", "mutate", "--surface", "P2", "--E", "0", "--F", "1",
                     "--side", "left"});
  CHECK(m["result"]["rank"] == 2);

  json c = out_json({"delpezzo", "cohomology", "--surface", "dP5", "--D",
                     "1,0,-1,-1,-1,-1"});
  CHECK(c["h0"] == 0);
  CHECK(c["h1"] == 1);
  CHECK(c["h2"] == 0);

  nccr::CliOutcome t = run_command({"delpezzo", "cohomology", "--surface", "dP5", "--D",
                                    "1,0,-1,-1,-1,-1", "--format", "text"});
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("h1: 1") != std::string::npos);
}

TEST_CASE("groebner subcommands") {
  json b = out_json({"groebner", "basis", "--vars", "x,y", "--ideal",
                     "x^2 - y, x*y - 1"});
  CHECK(b["size"].get<int>() >= 2);

  json n = out_json({"groebner", "nf", "--vars", "x,y,z", "--ideal",
                     "x^2 - y*z, x*y - z^2", "--poly", "x^3 - z^3"});
  CHECK(n["member"] == true);
  CHECK(n["remainder"] == "0");

  json d = out_json({"groebner", "depth", "--vars", "x,y,z,w", "--ideal",
                     "x*w - y*z"});
  CHECK(d["cm"] == true);
  CHECK(d["depth"] == 3);
}

TEST_CASE("invariants subcommands") {
  json hb = out_json({"invariants", "hilbert-basis", "--weights", "1,1,-1,-1"});
  CHECK(hb["count"] == 4);
  CHECK(hb["certificates"]["closure_checked"] == true);

  json lb = out_json({"invariants", "lc-bound", "--weights", "2,1,-1,-2"});
  CHECK(lb["plus"] == -3);
  CHECK(lb["minus"] == -3);

  json cm = out_json({"invariants", "cm-sweep", "--weights", "1,1,-1,-1",
                      "--lo", "2", "--hi", "2"});
  CHECK(cm["all_cm"] == false);
  CHECK(cm["reports"][0]["depth"] == 2);

  json bi = out_json({"invariants", "bidual-check", "--weights", "1,1,-1,-1",
                      "--a", "1", "--b", "-1", "--degree", "6"});
  CHECK(bi["match"] == true);
}

TEST_CASE("exit codes: usage, resource, internal classes") {
  CHECK(run_command({"mu-tau", "--vars", "x,y"}).exit_code == 2);      // missing --poly
  CHECK(run_command({"no-such-command"}).exit_code == 2);
  CHECK(run_command({"--help"}).exit_code == 0);
  CHECK(run_command({"delpezzo", "--help"}).exit_code == 0);

  // degree cap exhausted mid-computation
  nccr::CliOutcome cap =
      run_command({"groebner", "basis", "--vars", "x,y,z,w", "--ideal",
                   "x*z - y^2, x*w - y*z, y*w - z^2", "--max-degree", "2"});
  CHECK(cap.exit_code == 3);
  CHECK(cap.err.find("CapExceeded") != std::string::npos);

  // precondition failures are usage errors
  CHECK(run_command({"delpezzo", "tilting-check", "--surface", "dP1", "--L", "1,0",
                     "--collection", "0,0;1,0"})
            .exit_code == 2);
  CHECK(run_command({"delpezzo", "surface", "--surface", "dP9"}).exit_code == 2);
  CHECK(run_command({"invariants", "gorenstein", "--weights", "2,2,-2,-2"}).exit_code == 2);
}

TEST_CASE("usage errors carry the deepest subcommand grammar") {
  nccr::CliOutcome r = run_command({"delpezzo", "euler", "--surface", "P2"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("--E") != std::string::npos);
  CHECK(r.err.find("--F") != std::string::npos);
}

TEST_CASE("strong-check and ko-report through the CLI") {
  json st = out_json({"delpezzo", "strong-check", "--surface", "P2",
                      "--collection", "0;1;2"});
  CHECK(st["verdict"] == true);

  json ko = out_json({"delpezzo", "ko-report", "--surface", "P2",
                      "--collection", "0;1;2"});
  CHECK(ko["monotone"] == true);
  CHECK(ko["serre_chi_ok"] == true);
  CHECK(ko["slopes"][0] == "-9");
  CHECK(ko["slopes"][9] == "18");
}
