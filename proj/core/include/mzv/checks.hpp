#ifndef MZV_CHECKS_HPP
#define MZV_CHECKS_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mzv/ball.hpp"
#include "mzv/composition.hpp"
#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

using Params = std::map<std::string, std::string>;

/// Outcome of one verified identity: both sides, the residual against the
/// tolerance, and the wall time spent.
struct CheckResult {
  std::string name;
  Params params;
  std::string lhs;
  std::string rhs;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  double seconds = 0;
  std::string note;

  std::string params_string() const;
  std::string to_line() const;
  std::string to_json() const;
};

/// Builds a numeric result; passing requires both the midpoint residual and
/// the summed enclosure radii to stay under the tolerance, so a pass is
/// never an artifact of wide balls.
CheckResult numeric_check(const std::string& name, const Params& params,
                          const Ball& lhs, const Ball& rhs, double tol);
CheckResult exact_check(const std::string& name, const Params& params, bool ok,
                        const std::string& lhs, const std::string& rhs);

/// Memoized Hoelder MZV evaluation shared by the whole suite.
Ball mzv_cached(const Composition& s, Prec prec);

// ----------------------------------------------------------- check catalog

std::vector<CheckResult> check_duality(long max_weight, long digits, double tol);
std::vector<CheckResult> check_sum_formula(long max_n, long digits, double tol);
std::vector<CheckResult> check_ohno(const Composition& p, long max_m, long digits,
                                    double tol);
std::vector<CheckResult> check_double_shuffle(long max_depth_sum, long max_weight,
                                              long digits, double tol);
std::vector<CheckResult> check_cyclic_insertion(long m, long n, long digits,
                                                double tol, bool conjecture_orbits);

CheckResult check_gf_zfact(const Rat& x, const Rat& z, long trunc, long digits,
                           double tol);
CheckResult check_gf_z313(const Rat& x, const Rat& z, long trunc, long digits,
                          double tol);
CheckResult check_gf_mgf(const Rat& x, const Rat& t, long trunc, long digits,
                         double tol);
std::vector<CheckResult> check_gf_drin(long max_sum, long digits, double tol);
CheckResult check_gf_period1(long s, const Rat& t, long product_terms,
                             long digits, double tol);
CheckResult check_gf_sincs(long n, const Rat& t, long digits, double tol);
CheckResult check_gf_adef(const Rat& z, long pairs, long digits, double tol);

CheckResult check_reduction(const std::string& which, long param, long digits,
                            double tol);
/// period-one reduction: exact pi-power identity for even s plus the
/// partition/Newton agreement.
std::vector<CheckResult> check_period1_reduction(long s, long max_k);

std::vector<CheckResult> check_shuffle_tbinom(long max_m);
std::vector<CheckResult> check_shuffle_mfact(long max_degree);

CheckResult check_new_integral(const Composition& s, const std::vector<Rat>& xs,
                               long order, long digits, double tol);

std::vector<CheckResult> check_q_shuffle_all(long max_len, const Rat& x,
                                             const Rat& q);
CheckResult check_q_worked_example();
CheckResult check_q_expansions(const Rat& x, const Rat& q);
CheckResult check_q_limit(long steps);

CheckResult check_stuffle_counts(long max_m, long max_n);
CheckResult check_lattice_counts(long max_m, long max_n);
CheckResult check_tau(long max_m, long max_k);
std::vector<CheckResult> check_nonpositive_limits(long max_n);
std::vector<CheckResult> check_dimension_tables(long max_weight, long max_depth);

// ------------------------------------------------------------------ suite

struct SuiteEntry {
  std::string name;
  Params defaults;
  std::function<std::vector<CheckResult>(const Params&)> run;
};

const std::vector<SuiteEntry>& suite_registry();

struct SuiteConfig {
  // check name -> parameter overrides, in file order; empty = full catalog
  std::vector<std::pair<std::string, Params>> entries;
};

/// Parses the plain-text config: one check per line, "name key=value ...";
/// '#' starts a comment.  Unknown names or malformed pairs report the line
/// number.
SuiteConfig parse_suite_config(std::istream& in);
SuiteConfig parse_suite_config_file(const std::string& path);

struct SuiteReport {
  std::vector<CheckResult> results;
  bool all_pass = true;
  double seconds = 0;
};

/// Runs the configured checks on a bounded worker pool.  Results are
/// ordered canonically (name, then parameters) regardless of parallelism.
SuiteReport run_suite(const SuiteConfig& config, long jobs);

std::string render_table(const std::vector<CheckResult>& results);
std::string render_json_lines(const std::vector<CheckResult>& results);

long params_get_long(const Params& p, const std::string& key, long fallback);
double params_get_double(const Params& p, const std::string& key, double fallback);
Rat params_get_rat(const Params& p, const std::string& key, const Rat& fallback);

}  // namespace mzv

#endif
