#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "cliffroot/parser.hpp"

using namespace cliffroot;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args) {
  std::string cmd = std::string(CLIFFROOT_BIN) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe))
    out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("sqrt --json roots re-parse and square back to the input") {
  for (auto [alg, text] : {std::pair{"3,0", "-1 + e3 - e12 + 1/2 e123"}, std::pair{"2,1", "2 + e1 + e13"},
                           std::pair{"4,1", "-1"}, std::pair{"1,3", "1 + e12 + e34 + e1234"}}) {
    Run r = run(std::string("sqrt --json --algebra ") + alg + " '" + text + "'");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    Signature sig = Signature::make(j["algebra"]["p"], j["algebra"]["q"]);
    Multivector a = parse_mv(text, sig);
    CHECK(mv_approx_eq(parse_mv(j["input"].get<std::string>(), sig), a, 1e-15));
    int accepted = 0;
    for (const auto &e : j["roots"]) {
      if (e["status"] != "accepted")
        continue;
      ++accepted;
      Multivector b = parse_mv(e["mv"].get<std::string>(), sig);
      CHECK(mv_approx_eq(b * b, a, 1e-9));
    }
    CHECK(accepted > 0);
    CHECK(j["version"] == "1.0.0");
    std::string cc = j["diagnostics"]["cross_check"];
    CHECK((cc == "agree" || (sig.n() > 4 && cc == "closed form unavailable")));
  }
}

TEST_CASE("sqrt-minus-one in Cl(4,1) lists sixteen roots") {
  Run r = run("sqrt-minus-one --json --algebra 4,1");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  int accepted = 0;
  for (const auto &e : j["roots"])
    accepted += e["status"] == "accepted";
  CHECK(accepted == 16);
}

TEST_CASE("methods can be selected") {
  Run closed = run("sqrt --json --closed-form --algebra 3,0 '1 + e1 + e23'");
  CHECK(closed.code == 0);
  CHECK(json::parse(closed.out)["method"] == "closed-form");
  Run spectral = run("sqrt --json --spectral --algebra 3,0 '1 + e1 + e23'");
  CHECK(spectral.code == 0);
  CHECK(json::parse(spectral.out)["method"] == "spectral");
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run("sqrt --algebra 9,9 1").code == 2);
  CHECK(run("sqrt --algebra 3,0 '1 + e7'").code == 2);
  CHECK(run("sqrt --algebra 3,0 '1 +'").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("sqrt '1'").code == 2);
}

TEST_CASE("other subcommands") {
  Run inv = run("inverse --json --algebra 3,0 '1 + 2e123'");
  CHECK(inv.code == 0);
  Signature sig = Signature::make(3, 0);
  CHECK(mv_approx_eq(parse_mv(json::parse(inv.out)["result"].get<std::string>(), sig),
                     parse_mv("1/5 - 2/5 e123", sig), 1e-14));
  CHECK(run("inverse --algebra 3,0 '1/2 + 1/2 e1'").code == 2);

  Run ex = run("exp --algebra 2,0 'e12'");
  CHECK(ex.code == 0);
  CHECK(ex.out.find("0.540302305868") != std::string::npos);

  Run ric = run("solve-riccati --json --algebra 3,0 '1 + 2e123' '2 + 3e123' '3 + 4e123'");
  CHECK(ric.code == 0);
  CHECK(ric.out.find("0.3356215886") != std::string::npos);
  CHECK(run("solve-riccati --algebra 3,0 1 1 e1").code == 2);

  Run quad = run("solve-quadratic --json --algebra 2,0 1 0");
  CHECK(quad.code == 0);

  Run verify = run("verify --algebra 2,2");
  CHECK(verify.code == 0);
  CHECK(verify.out.find("FAIL") == std::string::npos);

  Run table = run("rep-table --algebra 3,0");
  CHECK(table.code == 0);
}
