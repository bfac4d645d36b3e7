#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string kCli = RECURSELAB_CLI_PATH;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("sequence tables match the frozen rows") {
  auto tn = run("sequence --name Tn --max 9 --deterministic");
  CHECK(tn.status == 0);
  CHECK(tn.out ==
        "name=Tn max=9 values=1,4,14,53,223,1034,5221,28437,165859\n");
  auto vn = run("sequence --name Vn --max 9 --deterministic");
  CHECK(vn.status == 0);
  CHECK(vn.out == "name=Vn max=9 values=1,3,8,22,64,196,625,2055,6917\n");
}

TEST_CASE("eval emits values and counters") {
  auto r = run("eval --schema gabriel --args 18,12,6 --strategy full "
               "--deterministic");
  CHECK(r.status == 0);
  CHECK(r.out == "schema=gabriel args=18,12,6 strategy=full kind=value "
                 "value=7 else=15902 total=63609 fuel=63609\n");
}

TEST_CASE("compare mode prints one JSON record per strategy") {
  auto r = run("eval --schema tak3 --args 5,3,1 --compare --format json "
               "--deterministic");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    CHECK(j["kind"] == "value");
    CHECK(j["value"] == "5");
    if (j["strategy"] == "lazy") CHECK(j["else"] == "4");
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("verify suites exit zero on success") {
  auto r = run("verify gf --deterministic");
  CHECK(r.status == 0);
  CHECK(r.out == "suite=gf ok=true checked=2\n");
  auto ranged = run("verify lemma1 --range -50..120 --format json "
                    "--deterministic");
  CHECK(ranged.status == 0);
  json j = json::parse(ranged.out);
  CHECK(j["ok"] == true);
  CHECK(j["checked"] == "171");
}

TEST_CASE("classify reports diagnostics for bad files") {
  auto bad = run("classify --hspec " + std::string(RECURSELAB_TEST_DATA) +
                 "/malformed.json");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("entry 0") != std::string::npos);
  auto good = run("classify --hspec " + std::string(RECURSELAB_TEST_DATA) +
                  "/parity.json --deterministic");
  CHECK(good.status == 0);
  CHECK(good.out.find("diverges-case-i") != std::string::npos);
}

TEST_CASE("unknown subcommands are usage errors") {
  CHECK(run("bogus").status == 2);
  CHECK(run("eval --schema nope --args 1 --strategy full").status == 2);
}

TEST_CASE("deterministic output is byte-identical across runs") {
  std::string args = "cost --args 7,0,8 --format csv --deterministic";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == "args,K,T,V\n\"7,0,8\",7,5221,625\n");
}

TEST_CASE("fuel can come from the environment") {
  auto r = run("eval --schema tak3 --args 9,0,10 --strategy full "
               "--deterministic",
               "RECURSELAB_FUEL=10");
  CHECK(r.status == 0);
  CHECK(r.out.find("kind=fuel-exhausted") != std::string::npos);
  CHECK(r.out.find("fuel=10") != std::string::npos);
}
