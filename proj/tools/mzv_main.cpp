// mzv: evaluate Euler sums and multiple polylogarithms, expand word/series
// products, tabulate combinatorics, and run the identity verification suite.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/checks.hpp"
#include "mzv/combinatorics.hpp"
#include "mzv/euler_sum.hpp"
#include "mzv/ncpoly.hpp"
#include "mzv/qvalue.hpp"
#include "mzv/symbolic.hpp"
#include "mzv/zeta_values.hpp"

namespace {

using namespace mzv;

nlohmann::json ball_json(const Ball& b) {
  nlohmann::json j;
  j["kind"] = "ball";
  j["decimal"] = b.to_string();
  j["mid_hex"] = b.mid_hex();
  j["rad_hex"] = b.rad_hex();
  j["prec_bits"] = static_cast<long>(b.prec());
  return j;
}

// "a", "a+b*i", "b*i", "i", "-i"; components are rational
void parse_complex(const std::string& text, Rat& re, Rat& im) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  re = 0;
  im = 0;
  if (s.empty()) throw MzvError(ErrorKind::Parse, "empty complex literal");
  // split at the last top-level '+' or '-' (not the leading sign)
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') split = i;
  bool has_i = s.back() == 'i';
  if (!has_i) {
    re = parse_rational(s);
    return;
  }
  auto parse_imag = [&](std::string part) {
    if (!part.empty() && part.back() == 'i') part.pop_back();
    if (!part.empty() && part.back() == '*') part.pop_back();
    if (part.empty() || part == "+") return Rat(1);
    if (part == "-") return Rat(-1);
    return parse_rational(part);
  };
  if (split == std::string::npos) {
    im = parse_imag(s);
    return;
  }
  re = parse_rational(s.substr(0, split));
  im = parse_imag(s.substr(split));
}

int run_eval(const std::string& comp_text, const std::string& x_text,
             long digits, bool json) {
  Rat x = parse_rational(x_text);
  SignedComposition sc = SignedComposition::parse(comp_text, x);
  Prec prec = digits_to_bits(digits);
  // plain admissible MZVs go through the fast Hoelder route
  bool plain_mzv = (x == 1) && sc.admissible();
  for (const SignedTerm& t : sc.terms) plain_mzv = plain_mzv && t.sigma == 1;
  Ball value = plain_mzv && !sc.terms.empty()
                   ? mzv_eval(Composition{[&] {
                                std::vector<long> p;
                                for (auto& t : sc.terms) p.push_back(t.s);
                                return p;
                              }()},
                              prec)
                   : euler_sum_eval(sc, prec);
  if (json)
    std::cout << ball_json(value).dump() << "\n";
  else
    std::cout << value.to_string() << "\n";
  return 0;
}

int run_li(const std::string& s_text, const std::vector<std::string>& z_texts,
           long digits, bool json) {
  Composition s = Composition::parse(s_text);
  Prec prec = digits_to_bits(digits);
  std::vector<CBall> z;
  for (const std::string& t : z_texts) {
    Rat re, im;
    parse_complex(t, re, im);
    z.push_back(CBall::from_rats(re, im, prec));
  }
  CBall v = multiple_polylog_eval(s.parts, z, prec);
  if (json) {
    nlohmann::json j;
    j["kind"] = "complex_ball";
    j["re"] = ball_json(v.real());
    j["im"] = ball_json(v.imag());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
  return 0;
}

int run_product(const std::string& type, const std::string& left,
                const std::string& right, const std::string& x_text,
                const std::string& q_text, bool json) {
  if (type == "stuffle") {
    auto result = stuffle(Composition::parse(left), Composition::parse(right));
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Composition& c : result) arr.push_back(c.to_string());
      std::cout << nlohmann::json{{"kind", "stuffle"}, {"terms", arr}}.dump()
                << "\n";
    } else {
      for (size_t i = 0; i < result.size(); ++i)
        std::cout << (i ? " + " : "") << "(" << result[i].to_string() << ")";
      std::cout << "\n";
    }
    return 0;
  }
  Word u = Word::parse(left);
  Word v = Word::parse(right);
  NcPoly p;
  if (type == "shuffle") {
    if (!u.classical() || !v.classical())
      throw MzvError(ErrorKind::OutOfDomain,
                     "shuffle expects classical words over {a,b}");
    p = shuffle(u, v);
  } else if (type == "qshuffle") {
    p = qshuffle(u, v);
  } else {
    throw MzvError(ErrorKind::Parse, "unknown product type '" + type + "'");
  }
  if (json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms())
      terms.push_back({{"word", w.to_string()}, {"coeff", gauss_to_string(c)}});
    nlohmann::json out{{"kind", type}, {"terms", terms}};
    if (type == "qshuffle" && !q_text.empty()) {
      Rat x = parse_rational(x_text.empty() ? "1" : x_text);
      Rat q = parse_rational(q_text);
      out["q_value"] = rat_to_string(q_word_value_exact(p, x, q));
      out["q_value_factors"] = rat_to_string(q_word_value_exact(u, x, q) *
                                             q_word_value_exact(v, x, q));
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << p.to_string() << "\n";
    if (type == "qshuffle" && !q_text.empty()) {
      // exact Jackson q-integral of both sides of the product rule
      Rat x = parse_rational(x_text.empty() ? "1" : x_text);
      Rat q = parse_rational(q_text);
      std::cout << "q-value        = "
                << rat_to_string(q_word_value_exact(p, x, q)) << "\n";
      std::cout << "value(u) value(v) = "
                << rat_to_string(q_word_value_exact(u, x, q) *
                                 q_word_value_exact(v, x, q))
                << "\n";
    }
  }
  return 0;
}

int run_count(long m, long n, bool table, bool json) {
  if (table) {
    nlohmann::json rows = nlohmann::json::array();
    for (long i = 0; i <= m; ++i) {
      std::string line;
      for (long j = 0; j <= n; ++j) {
        Int f = stuffle_count(i, j);
        if (json)
          rows.push_back({{"m", i}, {"n", j}, {"value", f.str()}});
        else
          line += (j ? " " : "") + f.str();
      }
      if (!json) std::cout << line << "\n";
    }
    if (json) std::cout << rows.dump() << "\n";
    return 0;
  }
  Int f = stuffle_count(m, n);
  if (json)
    std::cout << nlohmann::json{{"kind", "stuffle_count"},
                                {"m", m},
                                {"n", n},
                                {"value", f.str()}}
                     .dump()
              << "\n";
  else
    std::cout << f.str() << "\n";
  return 0;
}

int run_dims(const std::string& target, long max_weight, long max_depth,
             bool json) {
  auto table = dimension_exponents(dim_target_from_string(target), max_weight,
                                   max_depth);
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DimEntry& e : table)
      rows.push_back({{"n", e.weight}, {"k", e.depth}, {"value", e.value}});
    std::cout << rows.dump() << "\n";
  } else {
    std::printf("%6s %6s %8s\n", "n", "k", "value");
    for (const DimEntry& e : table)
      std::printf("%6ld %6ld %8ld\n", e.weight, e.depth, e.value);
  }
  return 0;
}

int report_results(const std::vector<CheckResult>& results, bool json) {
  if (json)
    std::cout << render_json_lines(results);
  else
    std::cout << render_table(results);
  for (const CheckResult& r : results)
    if (!r.pass) return 1;
  return 0;
}

int run_gf(const std::string& family, const Params& overrides, bool json) {
  // reuse the registry defaults for the family
  std::string entry_name = "gf_" + family;
  for (const SuiteEntry& e : suite_registry()) {
    if (e.name != entry_name) continue;
    Params merged = e.defaults;
    for (const auto& [k, v] : overrides) merged[k] = v;
    return report_results(e.run(merged), json);
  }
  throw MzvError(ErrorKind::Parse, "unknown generating-function family '" +
                                       family + "'");
}

int run_verify(const std::string& name, const std::vector<std::string>& kvs,
               bool json) {
  Params overrides;
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw MzvError(ErrorKind::Parse, "expected key=value, got '" + kv + "'");
    overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  for (const SuiteEntry& e : suite_registry()) {
    if (e.name != name) continue;
    Params merged = e.defaults;
    for (const auto& [k, v] : overrides) merged[k] = v;
    return report_results(e.run(merged), json);
  }
  throw MzvError(ErrorKind::Parse, "unknown check '" + name + "'");
}

int run_suite_cmd(const std::string& config_path, long jobs, bool json) {
  SuiteConfig config;
  if (!config_path.empty()) config = parse_suite_config_file(config_path);
  SuiteReport report = run_suite(config, jobs);
  if (json) {
    std::cout << render_json_lines(report.results);
  } else {
    std::cout << render_table(report.results);
    std::printf("total wall time %.1f s\n", report.seconds);
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mzv: multiple zeta values, Euler sums, and their identities"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate zeta_x of a signed composition");
  std::string comp_text, x_text = "1";
  long digits = 40;
  eval->add_option("composition", comp_text,
                   "composition; negative entries are barred (\"-1,1\")")
      ->required();
  eval->add_option("--x", x_text, "evaluation point in [0,1]");
  eval->add_option("--prec", digits, "decimal digits (default 40)");

  // li
  auto* li = app.add_subcommand("li", "multiple polylogarithm Li_s(z)");
  std::string li_s;
  std::vector<std::string> li_z;
  long li_digits = 40;
  li->add_option("s", li_s, "exponent list, e.g. 2,1")->required();
  li->add_option("--z", li_z, "arguments, e.g. 1/2 1 or 1/3+1/5i")->required();
  li->add_option("--prec", li_digits, "decimal digits");

  // product
  auto* product = app.add_subcommand("product", "shuffle/stuffle/qshuffle products");
  std::string ptype = "shuffle", pleft, pright, product_x, product_q;
  product->add_option("--type", ptype, "shuffle|stuffle|qshuffle");
  product->add_option("left", pleft, "word or composition")->required();
  product->add_option("right", pright, "word or composition")->required();
  product->add_option("--x", product_x, "q-integral endpoint (qshuffle)");
  product->add_option("--q", product_q,
                      "evaluate both sides of the q-product rule at this q");

  // dual
  auto* dual = app.add_subcommand("dual", "dual composition");
  std::string dual_text;
  dual->add_option("composition", dual_text)->required();

  // count
  auto* count = app.add_subcommand("count", "stuffle counts f(m,n)");
  std::vector<long> count_mn;
  bool count_table = false;
  count->add_option("--stuffle", count_mn, "m n")->expected(2)->required();
  count->add_flag("--table", count_table, "print the whole table up to (m,n)");

  // dims
  auto* dims = app.add_subcommand("dims", "dimension-conjecture exponent tables");
  std::string dims_target = "mzv_basis";
  long dims_w = 12, dims_k = 4;
  dims->add_option("--target", dims_target,
                   "mzv_basis|mzv_via_euler|euler_basis|clausen");
  dims->add_option("--max-weight", dims_w, "weight bound");
  dims->add_option("--max-depth", dims_k, "depth bound");

  // gf
  auto* gf = app.add_subcommand("gf", "generating-function checks");
  std::string gf_family, gf_x, gf_z, gf_t, gf_tol;
  long gf_trunc = -1, gf_prec = -1;
  std::vector<std::string> gf_kvs;
  gf->add_option("--family", gf_family,
                 "zfact|z313|mgf|mgf_x1|drin|period1|sincs|adef")
      ->required();
  gf->add_option("--x", gf_x, "evaluation point x");
  gf->add_option("--z", gf_z, "series variable z");
  gf->add_option("--t", gf_t, "series variable t");
  gf->add_option("--trunc", gf_trunc, "truncation order");
  gf->add_option("--prec", gf_prec, "decimal digits");
  gf->add_option("--tol", gf_tol, "tolerance");
  gf->add_option("set", gf_kvs, "key=value overrides (x, z, t, trunc, prec, tol)");

  // verify
  auto* verify = app.add_subcommand("verify", "run one named check");
  std::string verify_name;
  std::vector<std::string> verify_kvs;
  verify->add_option("check", verify_name, "check name from the suite registry")
      ->required();
  verify->add_option("set", verify_kvs, "key=value overrides");

  // suite
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  std::string suite_config;
  long suite_jobs = 1;
  suite->add_option("--config", suite_config, "config file (one check per line)");
  suite->add_option("--jobs", suite_jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(comp_text, x_text, digits, json);
    if (li->parsed()) return run_li(li_s, li_z, li_digits, json);
    if (product->parsed())
      return run_product(ptype, pleft, pright, product_x, product_q, json);
    if (dual->parsed()) {
      std::cout << dual_composition(Composition::parse(dual_text)).to_string()
                << "\n";
      return 0;
    }
    if (count->parsed())
      return run_count(count_mn[0], count_mn[1], count_table, json);
    if (dims->parsed()) return run_dims(dims_target, dims_w, dims_k, json);
    if (gf->parsed()) {
      Params overrides;
      if (!gf_x.empty()) overrides["x"] = gf_x;
      if (!gf_z.empty()) overrides["z"] = gf_z;
      if (!gf_t.empty()) overrides["t"] = gf_t;
      if (!gf_tol.empty()) overrides["tol"] = gf_tol;
      if (gf_trunc >= 0) overrides["trunc"] = std::to_string(gf_trunc);
      if (gf_prec >= 0) overrides["prec"] = std::to_string(gf_prec);
      for (const std::string& kv : gf_kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
          throw MzvError(ErrorKind::Parse, "expected key=value, got '" + kv + "'");
        overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      return run_gf(gf_family, overrides, json);
    }
    if (verify->parsed()) return run_verify(verify_name, verify_kvs, json);
    if (suite->parsed()) return run_suite_cmd(suite_config, suite_jobs, json);
  } catch (const MzvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
