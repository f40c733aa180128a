#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mzv/checks.hpp"

namespace mzv {

long params_get_long(const Params& p, const std::string& key, long fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw MzvError(ErrorKind::Parse, "bad integer for '" + key + "': " + it->second);
  }
}

double params_get_double(const Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw MzvError(ErrorKind::Parse, "bad number for '" + key + "': " + it->second);
  }
}

Rat params_get_rat(const Params& p, const std::string& key, const Rat& fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  return parse_rational(it->second);
}

std::string CheckResult::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  nlohmann::json pj = nlohmann::json::object();
  for (const auto& [k, v] : params) pj[k] = v;
  j["params"] = pj;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["residual"] = residual;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["seconds"] = seconds;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

namespace {

long digits_of(const Params& p) { return params_get_long(p, "prec", 40); }
double tol_of(const Params& p, double fallback) {
  return params_get_double(p, "tol", fallback);
}

std::vector<SuiteEntry> build_registry() {
  std::vector<SuiteEntry> reg;

  reg.push_back({"duality",
                 {{"weight", "9"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   return check_duality(params_get_long(p, "weight", 9),
                                        digits_of(p), tol_of(p, 1e-20));
                 }});

  reg.push_back({"sum_formula",
                 {{"max_n", "8"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   return check_sum_formula(params_get_long(p, "max_n", 8),
                                            digits_of(p), tol_of(p, 1e-20));
                 }});

  reg.push_back({"ohno",
                 {{"p", "3"}, {"max_m", "2"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   Composition comp = Composition::parse(
                       p.count("p") ? p.at("p") : std::string("3"));
                   return check_ohno(comp, params_get_long(p, "max_m", 2),
                                     digits_of(p), tol_of(p, 1e-20));
                 }});

  reg.push_back({"double_shuffle",
                 {{"max_depth_sum", "4"}, {"max_weight", "8"}, {"prec", "40"},
                  {"tol", "1e-20"}},
                 [](const Params& p) {
                   return check_double_shuffle(
                       params_get_long(p, "max_depth_sum", 4),
                       params_get_long(p, "max_weight", 8), digits_of(p),
                       tol_of(p, 1e-20));
                 }});

  reg.push_back(
      {"cyclic_insertion",
       {{"prec", "40"}, {"tol", "1e-12"}, {"orbits", "1"}},
       [](const Params& p) {
         bool orbits = params_get_long(p, "orbits", 1) != 0;
         std::vector<CheckResult> out;
         if (p.count("m")) {
           long m = params_get_long(p, "m", 2);
           long n = params_get_long(p, "n", 1);
           return check_cyclic_insertion(m, n, digits_of(p), tol_of(p, 1e-12),
                                         orbits);
         }
         for (long m = 1; m <= 4; ++m) {
           auto rows = check_cyclic_insertion(m, 0, digits_of(p),
                                              tol_of(p, 1e-12), false);
           out.insert(out.end(), rows.begin(), rows.end());
         }
         const std::pair<long, long> cases[] = {{2, 1}, {3, 1}, {4, 1},
                                                {4, 2}, {5, 2}, {6, 2}};
         for (auto [m, n] : cases) {
           auto rows = check_cyclic_insertion(m, n, digits_of(p),
                                              tol_of(p, 1e-12), orbits);
           out.insert(out.end(), rows.begin(), rows.end());
         }
         return out;
       }});

  reg.push_back({"gf_zfact",
                 {{"x", "1/2"}, {"z", "3/10"}, {"trunc", "6"}, {"prec", "40"},
                  {"tol", "1e-10"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_gf_zfact(
                       params_get_rat(p, "x", Rat(1, 2)),
                       params_get_rat(p, "z", Rat(3, 10)),
                       params_get_long(p, "trunc", 6), digits_of(p),
                       tol_of(p, 1e-10))};
                 }});

  reg.push_back({"gf_z313",
                 {{"x", "1/2"}, {"z", "3/10"}, {"trunc", "6"}, {"prec", "40"},
                  {"tol", "1e-10"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_gf_z313(
                       params_get_rat(p, "x", Rat(1, 2)),
                       params_get_rat(p, "z", Rat(3, 10)),
                       params_get_long(p, "trunc", 6), digits_of(p),
                       tol_of(p, 1e-10))};
                 }});

  reg.push_back({"gf_mgf",
                 {{"x", "1/2"}, {"t", "3/10"}, {"trunc", "46"}, {"prec", "40"},
                  {"tol", "1e-10"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_gf_mgf(
                       params_get_rat(p, "x", Rat(1, 2)),
                       params_get_rat(p, "t", Rat(3, 10)),
                       params_get_long(p, "trunc", 46), digits_of(p),
                       tol_of(p, 1e-10))};
                 }});

  // the x = 1 run exercises the alternating tail bounds at reduced tolerance
  reg.push_back({"gf_mgf_x1",
                 {{"t", "1/20"}, {"trunc", "10"}, {"prec", "12"}, {"tol", "1e-6"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_gf_mgf(
                       Rat(1), params_get_rat(p, "t", Rat(1, 20)),
                       params_get_long(p, "trunc", 10),
                       params_get_long(p, "prec", 12), tol_of(p, 1e-6))};
                 }});

  reg.push_back({"gf_drin",
                 {{"max_sum", "6"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   return check_gf_drin(params_get_long(p, "max_sum", 6),
                                        digits_of(p), tol_of(p, 1e-20));
                 }});

  reg.push_back({"gf_period1",
                 {{"s", "3"}, {"t", "1/2"}, {"terms", "30000"}, {"prec", "20"},
                  {"tol", "1e-10"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_gf_period1(
                       params_get_long(p, "s", 3),
                       params_get_rat(p, "t", Rat(1, 2)),
                       params_get_long(p, "terms", 30000),
                       params_get_long(p, "prec", 20), tol_of(p, 1e-10))};
                 }});

  reg.push_back({"gf_sincs",
                 {{"prec", "40"}, {"tol", "1e-30"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   out.push_back(check_gf_sincs(1, Rat(1, 2), digits_of(p),
                                                tol_of(p, 1e-30)));
                   out.push_back(check_gf_sincs(2, Rat(1, 3), digits_of(p),
                                                tol_of(p, 1e-30)));
                   return out;
                 }});

  reg.push_back({"gf_adef",
                 {{"z", "1/2"}, {"pairs", "60000"}, {"prec", "25"},
                  {"tol", "1e-13"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   out.push_back(check_gf_adef(params_get_rat(p, "z", Rat(1, 2)),
                                               params_get_long(p, "pairs", 60000),
                                               params_get_long(p, "prec", 25),
                                               tol_of(p, 1e-13)));
                   out.push_back(check_gf_adef(Rat(3, 10),
                                               params_get_long(p, "pairs", 60000),
                                               params_get_long(p, "prec", 25),
                                               tol_of(p, 1e-13)));
                   return out;
                 }});

  reg.push_back({"reduction_euler",
                 {{"max_m", "6"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   for (long m = 2; m <= params_get_long(p, "max_m", 6); ++m)
                     out.push_back(check_reduction("euler", m, digits_of(p),
                                                   tol_of(p, 1e-20)));
                   return out;
                 }});

  reg.push_back({"reduction_markett",
                 {{"max_s", "5"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   for (long s = 3; s <= params_get_long(p, "max_s", 5); ++s)
                     out.push_back(check_reduction("markett", s, digits_of(p),
                                                   tol_of(p, 1e-20)));
                   return out;
                 }});

  reg.push_back({"reduction_z31",
                 {{"max_n", "3"}, {"prec", "40"}, {"tol", "1e-25"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   for (long n = 1; n <= params_get_long(p, "max_n", 3); ++n)
                     out.push_back(check_reduction("z31", n, digits_of(p),
                                                   tol_of(p, 1e-25)));
                   return out;
                 }});

  reg.push_back({"reduction_z313",
                 {{"max_n", "2"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   for (long n = 0; n <= params_get_long(p, "max_n", 2); ++n)
                     out.push_back(check_reduction("z313", n, digits_of(p),
                                                   tol_of(p, 1e-20)));
                   return out;
                 }});

  reg.push_back({"reduction_z213",
                 {{"max_n", "2"}, {"prec", "40"}, {"tol", "1e-20"}},
                 [](const Params& p) {
                   std::vector<CheckResult> out;
                   for (long n = 0; n <= params_get_long(p, "max_n", 2); ++n)
                     out.push_back(check_reduction("z213", n, digits_of(p),
                                                   tol_of(p, 1e-20)));
                   return out;
                 }});

  reg.push_back({"reduction_period1",
                 {{"max_k", "8"}},
                 [](const Params& p) {
                   long maxk = params_get_long(p, "max_k", 8);
                   std::vector<CheckResult> out = check_period1_reduction(2, maxk);
                   auto four = check_period1_reduction(4, maxk);
                   out.insert(out.end(), four.begin(), four.end());
                   return out;
                 }});

  reg.push_back({"shuffle_tbinom",
                 {{"max_m", "6"}},
                 [](const Params& p) {
                   return check_shuffle_tbinom(params_get_long(p, "max_m", 6));
                 }});

  reg.push_back({"shuffle_mfact",
                 {{"max_degree", "12"}},
                 [](const Params& p) {
                   return check_shuffle_mfact(params_get_long(p, "max_degree", 12));
                 }});

  reg.push_back(
      {"new_integral",
       {{"order", "24"}, {"prec", "20"}, {"tol", "1e-8"}},
       [](const Params& p) {
         long order = params_get_long(p, "order", 24);
         long digits = params_get_long(p, "prec", 20);
         double tol = tol_of(p, 1e-8);
         Rat half(1, 2);
         std::vector<CheckResult> out;
         out.push_back(check_new_integral(Composition{{1}}, {half}, order, digits, tol));
         out.push_back(check_new_integral(Composition{{2}}, {half}, order, digits, tol));
         out.push_back(
             check_new_integral(Composition{{1, 1}}, {half, half}, order, digits, tol));
         out.push_back(
             check_new_integral(Composition{{2, 1}}, {half, half}, order, digits, tol));
         return out;
       }});

  reg.push_back({"q_shuffle",
                 {{"max_len", "4"}},
                 [](const Params& p) {
                   long len = params_get_long(p, "max_len", 4);
                   std::vector<CheckResult> out =
                       check_q_shuffle_all(len, Rat(1), Rat(1, 2));
                   auto second = check_q_shuffle_all(len, Rat(4, 5), Rat(7, 10));
                   out.insert(out.end(), second.begin(), second.end());
                   out.push_back(check_q_worked_example());
                   out.push_back(check_q_expansions(Rat(1), Rat(1, 2)));
                   out.push_back(check_q_expansions(Rat(4, 5), Rat(7, 10)));
                   out.push_back(check_q_limit(12));
                   return out;
                 }});

  reg.push_back({"stuffle_counts",
                 {{"max_m", "8"}, {"max_n", "8"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_stuffle_counts(
                       params_get_long(p, "max_m", 8), params_get_long(p, "max_n", 8))};
                 }});

  reg.push_back({"lattice_counts",
                 {{"max_m", "6"}, {"max_n", "6"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_lattice_counts(
                       params_get_long(p, "max_m", 6), params_get_long(p, "max_n", 6))};
                 }});

  reg.push_back({"tau_factorizations",
                 {{"max_m", "2000"}, {"max_k", "4"}},
                 [](const Params& p) {
                   return std::vector<CheckResult>{check_tau(
                       params_get_long(p, "max_m", 2000), params_get_long(p, "max_k", 4))};
                 }});

  reg.push_back({"nonpositive_limits",
                 {{"max_n", "6"}},
                 [](const Params& p) {
                   return check_nonpositive_limits(params_get_long(p, "max_n", 6));
                 }});

  reg.push_back({"dimension_tables",
                 {{"max_weight", "12"}, {"max_depth", "4"}},
                 [](const Params& p) {
                   return check_dimension_tables(params_get_long(p, "max_weight", 12),
                                                 params_get_long(p, "max_depth", 4));
                 }});

  return reg;
}

}  // namespace

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> reg = build_registry();
  return reg;
}

SuiteConfig parse_suite_config(std::istream& in) {
  SuiteConfig config;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    if (name == "all") {
      for (const SuiteEntry& e : suite_registry()) config.entries.push_back({e.name, {}});
      continue;
    }
    bool known = false;
    for (const SuiteEntry& e : suite_registry()) known = known || e.name == name;
    if (!known)
      throw MzvError(ErrorKind::Parse, "config line " + std::to_string(lineno) +
                                           ": unknown check '" + name + "'");
    Params overrides;
    std::string kv;
    while (ls >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw MzvError(ErrorKind::Parse, "config line " + std::to_string(lineno) +
                                             ": expected key=value, got '" + kv + "'");
      overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    config.entries.push_back({name, std::move(overrides)});
  }
  return config;
}

SuiteConfig parse_suite_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw MzvError(ErrorKind::Parse, "cannot open config '" + path + "'");
  return parse_suite_config(in);
}

SuiteReport run_suite(const SuiteConfig& config, long jobs) {
  std::vector<std::pair<std::string, Params>> tasks = config.entries;
  if (tasks.empty())
    for (const SuiteEntry& e : suite_registry()) tasks.push_back({e.name, {}});

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<CheckResult>> buckets(tasks.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto& [name, overrides] = tasks[i];
      const SuiteEntry* entry = nullptr;
      for (const SuiteEntry& e : suite_registry())
        if (e.name == name) entry = &e;
      if (!entry) continue;
      Params merged = entry->defaults;
      for (const auto& [k, v] : overrides) merged[k] = v;
      try {
        buckets[i] = entry->run(merged);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  long n_threads = std::max<long>(1, jobs);
  std::vector<std::thread> pool;
  for (long t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  SuiteReport report;
  for (auto& bucket : buckets)
    for (auto& r : bucket) report.results.push_back(std::move(r));
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.params_string() < b.params_string();
                   });
  for (const CheckResult& r : report.results) report.all_pass &= r.pass;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string render_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  long passed = 0;
  for (const CheckResult& r : results) {
    os << r.to_line() << "\n";
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

std::string render_json_lines(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const CheckResult& r : results) os << r.to_json() << "\n";
  return os.str();
}

}  // namespace mzv
