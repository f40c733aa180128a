#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mzv/ball.hpp"

namespace {

struct CliOutput {
  int exit_code;
  std::string out;  // stdout and stderr combined
};

CliOutput run_cli(const std::string& args) {
  std::string cmd = std::string(MZV_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("eval prints the zagier value") {
  CliOutput r = run_cli("eval 3,1 --prec 40");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.27058080842778454787900092413529197569") != std::string::npos);
  CHECK(r.out.find("\xc2\xb1") != std::string::npos);
}

TEST_CASE("eval handles bars and x") {
  CliOutput r = run_cli("eval -1 --prec 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("-0.6931") != std::string::npos);

  CliOutput half = run_cli("eval 1 --x 1/2 --prec 20");
  CHECK(half.exit_code == 0);
  CHECK(half.out.find("0.69314718") != std::string::npos);
}

TEST_CASE("divergent input exits with code 2") {
  CliOutput r = run_cli("eval 1,1 --x 1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("divergent") != std::string::npos);
  CHECK(r.out.find("excluded") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
  CHECK(run_cli("eval 2,x").exit_code == 2);
  CHECK(run_cli("product --type stuffle 2 0").exit_code == 2);
  CHECK(run_cli("dual 1,2").exit_code == 2);
  CHECK(run_cli("verify no_such_check").exit_code == 2);
}

TEST_CASE("products") {
  CliOutput st = run_cli("product --type stuffle 2 3");
  CHECK(st.exit_code == 0);
  CHECK(st.out == "(2,3) + (3,2) + (5)\n");

  CliOutput sh = run_cli("product --type shuffle ab ab");
  CHECK(sh.out == "4*aabb + 2*abab\n");

  CliOutput qs = run_cli("product --type qshuffle a bc");
  CHECK(qs.out == "abc + ba[1]c + bca[2]\n");
}

TEST_CASE("dual and count") {
  CHECK(run_cli("dual 3").out == "2,1\n");
  CHECK(run_cli("dual 4,1").out == "3,1,1\n");
  CHECK(run_cli("dual 4,1,1").out == "4,1,1\n");  // self-dual
  CHECK(run_cli("count --stuffle 2 1").out == "5\n");
  CHECK(run_cli("count --stuffle 8 8 --json").exit_code == 0);
}

TEST_CASE("json ball output re-parses to the same bounds") {
  CliOutput r = run_cli("eval 2,1 --prec 30 --json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "ball");
  mzv::Ball b = mzv::Ball::from_hex(j["mid_hex"], j["rad_hex"],
                                    j["prec_bits"].get<long>());
  CHECK(b.to_string() == j["decimal"].get<std::string>());
  // and the value is zeta(3)
  mzv::Ball z3 = mzv::Ball::from_hex("0x1.33ba004f00621383p+0", "0x1p-60", 64);
  CHECK(overlaps(b, z3));
}

TEST_CASE("verify subcommand runs a single check") {
  CliOutput r = run_cli("verify nonpositive_limits");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("2/2 checks passed") != std::string::npos);

  CliOutput forced = run_cli("verify gf_sincs tol=0");
  CHECK(forced.exit_code == 1);
  CHECK(forced.out.find("FAIL") != std::string::npos);
}

TEST_CASE("suite respects config and is deterministic modulo seconds") {
  std::string config_path = std::string(MZV_CLI_PATH) + ".test_config";
  FILE* f = fopen(config_path.c_str(), "w");
  REQUIRE(f);
  fputs("# tiny run\nstuffle_counts max_m=4 max_n=4\nnonpositive_limits\n", f);
  fclose(f);

  CliOutput a = run_cli("suite --config " + config_path + " --jobs 1 --json");
  CliOutput b = run_cli("suite --config " + config_path + " --jobs 4 --json");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);

  auto strip_seconds = [](const std::string& text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      nlohmann::json j = nlohmann::json::parse(line);
      j.erase("seconds");
      out += j.dump() + "\n";
    }
    return out;
  };
  CHECK(strip_seconds(a.out) == strip_seconds(b.out));
  std::remove(config_path.c_str());
}

TEST_CASE("gf family subcommand") {
  CliOutput r = run_cli("gf --family period1 prec=15 tol=1e-8 terms=8000");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("li subcommand") {
  CliOutput r = run_cli("li 2 --z 1/2 --prec 25");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0.5822405264650125") != std::string::npos);
  CliOutput c = run_cli("li 1,1 --z 1/4+1/4i --z 2i --prec 20");
  CHECK(c.exit_code == 0);
}
