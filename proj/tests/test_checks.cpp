#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "mzv/checks.hpp"

using namespace mzv;

TEST_CASE("check result plumbing") {
  Ball a = Ball::pi(128);
  Ball b = Ball::pi(128);
  CheckResult ok = numeric_check("t", {{"k", "v"}}, a, b, 1e-20);
  CHECK(ok.pass);
  CHECK(ok.residual <= 1e-30);

  // zero tolerance forces a failure with the residual reported
  CheckResult forced = numeric_check("t", {}, a, b, 0.0);
  CHECK(!forced.pass);
  CHECK(forced.note == "enclosure radii exceed tolerance");

  // radius-masked agreement must not pass: wide balls, tiny tolerance
  Ball wide = Ball::pi(16);
  wide.add_error_2exp(-4);
  CheckResult masked = numeric_check("t", {}, wide, Ball::pi(16), 1e-10);
  CHECK(!masked.pass);
}

TEST_CASE("suite config parsing") {
  std::istringstream good("# comment\nduality weight=5\n\nq_shuffle\n");
  SuiteConfig cfg = parse_suite_config(good);
  REQUIRE(cfg.entries.size() == 2);
  CHECK(cfg.entries[0].first == "duality");
  CHECK(cfg.entries[0].second.at("weight") == "5");
  CHECK(cfg.entries[1].first == "q_shuffle");

  std::istringstream bad1("duality\nnot_a_check\n");
  CHECK_THROWS_WITH_AS(parse_suite_config(bad1),
                       "config line 2: unknown check 'not_a_check'", MzvError);
  std::istringstream bad2("duality weight\n");
  CHECK_THROWS_WITH_AS(parse_suite_config(bad2),
                       "config line 1: expected key=value, got 'weight'", MzvError);

  std::istringstream all("all\n");
  CHECK(parse_suite_config(all).entries.size() == suite_registry().size());
}

TEST_CASE("single-check run and forced failure") {
  SuiteConfig cfg;
  cfg.entries.push_back({"nonpositive_limits", {}});
  SuiteReport rep = run_suite(cfg, 1);
  CHECK(rep.all_pass);
  CHECK(rep.results.size() == 2);

  // tolerance 0 on a numeric check fails and reports the residual
  SuiteConfig forced;
  forced.entries.push_back({"gf_sincs", {{"tol", "0"}}});
  SuiteReport bad = run_suite(forced, 1);
  CHECK(!bad.all_pass);
  for (const CheckResult& r : bad.results) CHECK(!r.pass);
}

TEST_CASE("suite determinism across parallelism") {
  SuiteConfig cfg;
  cfg.entries.push_back({"stuffle_counts", {{"max_m", "5"}, {"max_n", "5"}}});
  cfg.entries.push_back({"lattice_counts", {{"max_m", "4"}, {"max_n", "4"}}});
  cfg.entries.push_back({"nonpositive_limits", {}});
  cfg.entries.push_back({"reduction_period1", {{"max_k", "5"}}});
  SuiteReport serial = run_suite(cfg, 1);
  SuiteReport parallel = run_suite(cfg, 4);
  REQUIRE(serial.results.size() == parallel.results.size());
  for (size_t i = 0; i < serial.results.size(); ++i) {
    CHECK(serial.results[i].name == parallel.results[i].name);
    CHECK(serial.results[i].params == parallel.results[i].params);
    CHECK(serial.results[i].lhs == parallel.results[i].lhs);
    CHECK(serial.results[i].rhs == parallel.results[i].rhs);
    CHECK(serial.results[i].residual == parallel.results[i].residual);
    CHECK(serial.results[i].pass == parallel.results[i].pass);
  }
}

TEST_CASE("json lines round trip") {
  SuiteConfig cfg;
  cfg.entries.push_back({"q_shuffle", {{"max_len", "3"}}});
  SuiteReport rep = run_suite(cfg, 2);
  std::string lines = render_json_lines(rep.results);
  std::istringstream in(lines);
  std::string line;
  size_t parsed = 0;
  while (std::getline(in, line)) {
    nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j.contains("name"));
    CHECK(j.contains("residual"));
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("pass"));
    CHECK(j.contains("seconds"));
    CHECK(j["pass"].is_boolean());
    ++parsed;
  }
  CHECK(parsed == rep.results.size());
}

TEST_CASE("mzv cache is consistent") {
  Ball a = mzv_cached(Composition::parse("2,1"), 128);
  Ball b = mzv_cached(Composition::parse("2,1"), 128);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("ohno includes duality and granville instances") {
  auto rows = check_ohno(Composition::parse("3"), 1, 20, 1e-12);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].pass);  // m = 0: duality zeta(3) = zeta(2,1)
  CHECK(rows[1].pass);  // m = 1: zeta(4) = zeta(3,1) + zeta(2,2)
  auto self_dual = check_ohno(Composition::parse("2"), 1, 20, 1e-12);
  for (const CheckResult& r : self_dual) CHECK(r.pass);
}

TEST_CASE("registry covers the spec catalog") {
  const char* names[] = {"duality", "sum_formula", "ohno", "double_shuffle",
                         "cyclic_insertion", "gf_zfact", "gf_z313", "gf_mgf",
                         "gf_mgf_x1", "gf_drin", "gf_period1", "gf_sincs",
                         "gf_adef", "reduction_euler", "reduction_markett",
                         "reduction_z31", "reduction_z313", "reduction_z213",
                         "reduction_period1", "shuffle_tbinom", "shuffle_mfact",
                         "new_integral", "q_shuffle", "stuffle_counts",
                         "lattice_counts", "tau_factorizations",
                         "nonpositive_limits", "dimension_tables"};
  for (const char* name : names) {
    bool found = false;
    for (const SuiteEntry& e : suite_registry()) found = found || e.name == name;
    CHECK_MESSAGE(found, name);
  }
}
