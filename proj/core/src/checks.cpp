#include "mzv/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "mzv/combinatorics.hpp"
#include "mzv/euler_sum.hpp"
#include "mzv/ncpoly.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/qvalue.hpp"
#include "mzv/special_functions.hpp"
#include "mzv/symbolic.hpp"
#include "mzv/zeta_values.hpp"

namespace mzv {

namespace {

struct StopWatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double lap() {
    auto t1 = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(t1 - t0).count();
    t0 = t1;
    return s;
  }
};

double residual_upper(const Ball& l, const Ball& r) {
  return Ball::mid_distance(l, r).upper().mid_double();
}

double slack_of(const Ball& l, const Ball& r) {
  return l.rad_double_upper() + r.rad_double_upper();
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Ball ball_of_rat(const Rat& r, Prec prec) { return Ball::from_rat(r, prec); }

// imaginary component should enclose zero within the tolerance
bool imag_small(const CBall& v, double tol) {
  Ball m = abs(v.imag()).upper();
  return m.mid_double() <= tol;
}

Composition repeat_pattern(const std::vector<long>& head,
                           const std::vector<long>& block, long times) {
  Composition c{head};
  for (long i = 0; i < times; ++i)
    c.parts.insert(c.parts.end(), block.begin(), block.end());
  return c;
}

}  // namespace

std::string CheckResult::params_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

std::string CheckResult::to_line() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << "  " << name;
  std::string ps = params_string();
  if (!ps.empty()) os << " [" << ps << "]";
  os << "  residual=" << fmt_double(residual) << " tol=" << fmt_double(tolerance)
     << " t=" << fmt_double(seconds) << "s";
  if (!note.empty()) os << "  (" << note << ")";
  return os.str();
}

CheckResult numeric_check(const std::string& name, const Params& params,
                          const Ball& lhs, const Ball& rhs, double tol) {
  CheckResult r;
  r.name = name;
  r.params = params;
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.residual = residual_upper(lhs, rhs);
  r.tolerance = tol;
  double slack = slack_of(lhs, rhs);
  r.pass = (r.residual <= tol) && (slack <= tol);
  if (slack > tol) r.note = "enclosure radii exceed tolerance";
  return r;
}

CheckResult exact_check(const std::string& name, const Params& params, bool ok,
                        const std::string& lhs, const std::string& rhs) {
  CheckResult r;
  r.name = name;
  r.params = params;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = ok ? 0 : 1;
  r.tolerance = 0;
  r.pass = ok;
  return r;
}

Ball mzv_cached(const Composition& s, Prec prec) {
  static std::map<std::pair<std::string, Prec>, Ball> cache;
  static std::mutex mu;
  auto key = std::make_pair(s.to_string(), prec);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Ball v = mzv_eval(s, prec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

// -------------------------------------------------------------- duality

std::vector<CheckResult> check_duality(long max_weight, long digits, double tol) {
  Prec prec = digits_to_bits(digits);
  std::vector<CheckResult> out;
  StopWatch watch;
  for (long w = 2; w <= max_weight; ++w) {
    for (const Composition& s : admissible_compositions_of_weight(w)) {
      Composition d = dual_composition(s);
      CheckResult r = numeric_check(
          "duality", {{"s", s.to_string()}, {"dual", d.to_string()}},
          mzv_cached(s, prec), mzv_cached(d, prec), tol);
      r.seconds = watch.lap();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> check_sum_formula(long max_n, long digits, double tol) {
  Prec prec = digits_to_bits(digits);
  std::vector<CheckResult> out;
  StopWatch watch;
  for (long n = 3; n <= max_n; ++n) {
    Ball rhs = mzv_cached(Composition{{n}}, prec);
    for (long k = 1; k < n; ++k) {
      Ball lhs = Ball::zero(prec);
      for (const Composition& s : admissible_compositions_of_weight_depth(n, k))
        lhs += mzv_cached(s, prec);
      CheckResult r = numeric_check(
          "sum_formula", {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
          lhs, rhs, tol);
      r.seconds = watch.lap();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> check_ohno(const Composition& p, long max_m, long digits,
                                    double tol) {
  if (!p.admissible())
    throw MzvError(ErrorKind::NotAdmissible, "Ohno needs an admissible p");
  Prec prec = digits_to_bits(digits);
  Composition pd = dual_composition(p);
  std::vector<CheckResult> out;
  StopWatch watch;
  auto ohno_sum = [&](const Composition& base, long m) {
    Ball acc = Ball::zero(prec);
    for (const auto& c : compositions_enum(base.depth(), m)) {
      Composition shifted = base;
      for (long j = 0; j < base.depth(); ++j) shifted.parts[j] += c[j];
      acc += mzv_cached(shifted, prec);
    }
    return acc;
  };
  for (long m = 0; m <= max_m; ++m) {
    CheckResult r = numeric_check(
        "ohno", {{"p", p.to_string()}, {"m", std::to_string(m)}},
        ohno_sum(p, m), ohno_sum(pd, m), tol);
    r.seconds = watch.lap();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_double_shuffle(long max_depth_sum, long max_weight,
                                              long digits, double tol) {
  Prec prec = digits_to_bits(digits);
  std::vector<Composition> all;
  for (long w = 2; w <= max_weight - 2; ++w)
    for (const Composition& s : admissible_compositions_of_weight(w))
      all.push_back(s);

  std::vector<CheckResult> out;
  StopWatch watch;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i; j < all.size(); ++j) {
      const Composition& u = all[i];
      const Composition& v = all[j];
      if (u.depth() + v.depth() > max_depth_sum) continue;
      if (u.weight() + v.weight() > max_weight) continue;

      Ball prod = mzv_cached(u, prec) * mzv_cached(v, prec);
      Ball st = Ball::zero(prec);
      for (const Composition& w : stuffle(u, v)) st += mzv_cached(w, prec);
      Ball sh = Ball::zero(prec);
      NcPoly shuffled =
          shuffle(word_from_composition(u), word_from_composition(v));
      for (const auto& [word, coeff] : shuffled.terms()) {
        sh += ball_of_rat(coeff.re, prec) *
              mzv_cached(composition_from_word(word), prec);
      }
      CheckResult r;
      r.name = "double_shuffle";
      r.params = {{"u", u.to_string()}, {"v", v.to_string()}};
      r.lhs = prod.to_string();
      r.rhs = st.to_string() + " | " + sh.to_string();
      r.residual = std::max(residual_upper(prod, st), residual_upper(prod, sh));
      r.tolerance = tol;
      double slack = slack_of(prod, st) + sh.rad_double_upper();
      r.pass = r.residual <= tol && slack <= tol;
      if (slack > tol) r.note = "enclosure radii exceed tolerance";
      r.seconds = watch.lap();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> check_cyclic_insertion(long m, long n, long digits,
                                                double tol, bool conjecture_orbits) {
  if (n < 0 || m < 2 * n)
    throw MzvError(ErrorKind::OutOfDomain, "cyclic insertion needs m >= 2n >= 0");
  Prec prec = digits_to_bits(digits);
  std::vector<CheckResult> out;
  StopWatch watch;
  Params base{{"m", std::to_string(m)}, {"n", std::to_string(n)}};

  if (n == 0) {
    // single term Z(m) = zeta({2}^m); exact pi-power identity
    ExactPiMultiple lhs = pi_form_of_even_poly(period1_reduce(m).instantiate(2));
    ExactPiMultiple rhs{Rat(2) * Rat(binomial(m + 1, 1)) / Rat(factorial(2 * m + 2)),
                        2 * m};
    CheckResult r = exact_check("cyclic_insertion", base, lhs == rhs,
                                lhs.to_string(), rhs.to_string());
    r.seconds = watch.lap();
    out.push_back(std::move(r));
    return out;
  }

  auto z_of = [&](const std::vector<long>& vec) {
    return mzv_cached(composition_from_word(phi_insertion(vec)), prec);
  };

  std::vector<std::vector<long>> comps = compositions_enum(2 * n + 1, m - 2 * n);
  Ball lhs = Ball::zero(prec);
  for (const auto& vec : comps) lhs += z_of(vec);
  ExactPiMultiple rhs_exact{
      Rat(2) * Rat(binomial(m + 1, 2 * n + 1)) / Rat(factorial(2 * m + 2)), 2 * m};
  CheckResult agg = numeric_check("cyclic_insertion", base, lhs,
                                  evaluate_pi_multiple(rhs_exact, prec), tol);
  agg.seconds = watch.lap();
  out.push_back(std::move(agg));

  if (conjecture_orbits) {
    // each cyclic-orbit sum should already equal Z(m) = pi^{2m}/(2m+1)!
    std::set<std::vector<long>> seen;
    Ball zm = evaluate_pi_multiple(closed_z2block(m), prec);
    for (const auto& vec : comps) {
      // canonical representative: lexicographically smallest rotation
      std::vector<long> canon = vec;
      std::vector<long> rot = vec;
      for (size_t r = 1; r < vec.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < canon) canon = rot;
      }
      if (!seen.insert(canon).second) continue;
      // C(s): the sum over all 2n+1 cyclic rotations, multiplicity kept
      Ball orbit = Ball::zero(prec);
      rot = canon;
      for (size_t r = 0; r < vec.size(); ++r) {
        orbit += z_of(rot);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      }
      Params p = base;
      std::ostringstream vs;
      for (size_t t = 0; t < canon.size(); ++t)
        vs << (t ? "," : "") << canon[t];
      p["orbit"] = vs.str();
      CheckResult r = numeric_check("cyclic_orbit", p, orbit, zm, tol);
      r.seconds = watch.lap();
      out.push_back(std::move(r));
    }
  }
  return out;
}

// ------------------------------------------------- generating functions

namespace {

CheckResult complex_vs_real_check(const std::string& name, const Params& params,
                                  const Ball& lhs, const CBall& rhs, double tol) {
  CheckResult r = numeric_check(name, params, lhs, rhs.real(), tol);
  if (!imag_small(rhs, tol)) {
    r.pass = false;
    r.note = "imaginary part fails to vanish";
  }
  return r;
}

}  // namespace

CheckResult check_gf_zfact(const Rat& x, const Rat& z, long trunc, long digits,
                           double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  Rat ratio = 4 * rat_pow(z, 4);
  if (!(ratio < 1))
    throw MzvError(ErrorKind::OutOfDomain, "zfact needs 4 z^4 < 1");

  Ball lhs = Ball::zero(prec);
  for (long n = 0; n <= trunc; ++n) {
    Rat scale = rat_pow(z, 4 * n) * Rat(int_pow(4, n));
    if (n % 2 != 0) scale = -scale;
    lhs += ball_of_rat(scale, prec) *
           zeta_x(repeat_pattern({}, {3, 1}, n), x, prec);
  }
  // |zeta_x({3,1}^n)| <= 2, so the dropped part is a clean geometric tail
  Rat bound = 2 * rat_pow(ratio, trunc + 1) / (1 - ratio);
  lhs.add_error(ball_of_rat(bound, 64));

  Ball xb = ball_of_rat(x, prec);
  CBall zc = CBall::from_rats(z, 0, prec);
  CBall iz = CBall::from_rats(0, z, prec);
  CBall rhs = y1_hyper(xb, zc, prec) * y1_hyper(xb, iz, prec);

  CheckResult r = complex_vs_real_check(
      "gf_zfact",
      {{"x", rat_to_string(x)}, {"z", rat_to_string(z)}, {"trunc", std::to_string(trunc)}},
      lhs, rhs, tol);
  r.seconds = watch.lap();
  return r;
}

CheckResult check_gf_z313(const Rat& x, const Rat& z, long trunc, long digits,
                          double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  Rat ratio = 4 * rat_pow(z, 4);
  if (!(ratio < 1))
    throw MzvError(ErrorKind::OutOfDomain, "z313 needs 4 z^4 < 1");

  Ball lhs = Ball::zero(prec);
  for (long n = 0; n <= trunc; ++n) {
    Rat scale = rat_pow(z, 4 * n + 2) * Rat(int_pow(4, n));
    if (n % 2 != 0) scale = -scale;
    lhs += ball_of_rat(scale, prec) *
           zeta_x(repeat_pattern({3}, {1, 3}, n), x, prec);
  }
  Rat bound = 2 * rat_pow(z, 2) * rat_pow(ratio, trunc + 1) / (1 - ratio);
  lhs.add_error(ball_of_rat(bound, 64));

  Ball xb = ball_of_rat(x, prec);
  Ball one = Ball::from_long(1, prec);
  CBall zc = CBall::from_rats(z, 0, prec);
  CBall iz = CBall::from_rats(0, z, prec);
  CBall four(Ball::from_long(4, prec));
  CBall rhs = g_kernel(zc, prec) * y1_hyper(xb, zc, prec) * y1_hyper(xb, iz, prec);
  rhs -= y1_hyper(xb, iz, prec) * y2_hyper(xb, zc, prec) /
         (four * y1_hyper(one, zc, prec));
  rhs += y1_hyper(xb, zc, prec) * y2_hyper(xb, iz, prec) /
         (four * y1_hyper(one, iz, prec));

  CheckResult r = complex_vs_real_check(
      "gf_z313",
      {{"x", rat_to_string(x)}, {"z", rat_to_string(z)}, {"trunc", std::to_string(trunc)}},
      lhs, rhs, tol);
  r.seconds = watch.lap();
  return r;
}

namespace {

// Rigorous bound on |zeta_x| for signed depth-k argument lists.
// x < 1:  sum_n x^n n^{k-1}/(k-1)! <= x/(1-x)^k.
// x = 1 (alternating lead): paired-term bound C (h(1) + I/2) with
//   I_j = 1 + j I_{j-1} (the integral of t^{-2}(1+ln t)^j from 1).
Rat coefficient_bound(const Rat& x, long k) {
  if (k == 0) return 1;
  if (x < 1) return x / rat_pow(1 - x, k);
  Rat i_val = 1;
  for (long j = 1; j <= k - 1; ++j) i_val = 1 + Rat(j) * i_val;
  Rat c = Rat(1) / Rat(factorial(k - 1));
  if (k >= 2) c += Rat(1) / Rat(factorial(k - 2));
  return c * (1 + i_val / 2);
}

SignedComposition mgf_even_coeff(long n, const Rat& x) {
  SignedComposition sc;
  sc.x = x;
  for (long i = 0; i < n; ++i) {
    sc.terms.push_back({1, -1});
    sc.terms.push_back({1, 1});
  }
  return sc;
}

SignedComposition mgf_odd_coeff(long n, const Rat& x) {
  SignedComposition sc;
  sc.x = x;
  sc.terms.push_back({1, -1});
  for (long i = 0; i < n; ++i) {
    sc.terms.push_back({1, 1});
    sc.terms.push_back({1, -1});
  }
  return sc;
}

}  // namespace

CheckResult check_gf_mgf(const Rat& x, const Rat& t, long trunc, long digits,
                         double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  if (!(2 * t < 1 && t > 0))
    throw MzvError(ErrorKind::OutOfDomain, "mgf needs 0 < t < 1/2");
  if (x < 1 && !(t < 1 - x))
    throw MzvError(ErrorKind::OutOfDomain, "mgf needs t < 1 - x");

  Ball lhs = Ball::zero(prec);
  for (long d = 0; d <= trunc; ++d) {
    SignedComposition sc =
        d % 2 == 0 ? mgf_even_coeff(d / 2, x) : mgf_odd_coeff(d / 2, x);
    lhs += ball_of_rat(rat_pow(t, d), prec) * euler_sum_eval(sc, prec);
  }
  // truncation: 40 explicit coefficient bounds, then a geometric envelope
  // (per extra t-power the bound grows by 1/(1-x), by at most 2 at x = 1)
  Ball trunc_bound = Ball::zero(64);
  long d0 = trunc + 40;
  for (long d = trunc + 1; d <= d0; ++d)
    trunc_bound += ball_of_rat(rat_pow(t, d) * coefficient_bound(x, d), 64);
  Rat rho = 2 * t;
  if (x < 1) rho = t / (1 - x);
  Rat coarse = rat_pow(t, d0) * coefficient_bound(x, d0) * rho / (1 - rho);
  trunc_bound += ball_of_rat(coarse, 64);
  lhs.add_error(trunc_bound.upper());

  // rhs: U(s,-z) U(s,iz) / (A(-z) A(iz)), z = (1+i) t / 2, s = (1+x)/2
  Ball s_arg = ball_of_rat((1 + x) / 2, prec);
  CBall z = CBall::from_rats(t / 2, t / 2, prec);
  CBall iz = CBall::from_rats(-t / 2, t / 2, prec);
  CBall rhs = u_hyper(s_arg, -z, prec) * u_hyper(s_arg, iz, prec) /
              (a_of_z(-z, prec) * a_of_z(iz, prec));

  CheckResult r = complex_vs_real_check(
      "gf_mgf",
      {{"x", rat_to_string(x)}, {"t", rat_to_string(t)}, {"trunc", std::to_string(trunc)}},
      lhs, rhs, tol);
  r.seconds = watch.lap();
  return r;
}

std::vector<CheckResult> check_gf_drin(long max_sum, long digits, double tol) {
  Prec prec = digits_to_bits(digits);
  std::vector<CheckResult> out;
  StopWatch watch;
  for (long total = 0; total <= max_sum; ++total) {
    for (long m = 0; m <= total; ++m) {
      long n = total - m;
      ZetaPoly sym = drin_coefficient(m, n);
      bool symmetric = (sym == drin_coefficient(n, m));
      Composition target = repeat_pattern({m + 2}, {1}, n);
      CheckResult r = numeric_check(
          "gf_drin", {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
          evaluate_symbolic(sym, prec), mzv_cached(target, prec), tol);
      if (!symmetric) {
        r.pass = false;
        r.note = "coefficient not symmetric in (m,n)";
      }
      r.seconds = watch.lap();
      out.push_back(std::move(r));
    }
  }
  return out;
}

CheckResult check_gf_period1(long s, const Rat& t, long product_terms,
                             long digits, double tol) {
  StopWatch watch;
  if (s < 3)
    throw MzvError(ErrorKind::OutOfDomain,
                   "period1 product tail needs s >= 3 at this tolerance");
  Prec prec = digits_to_bits(digits);

  Rat u = rat_pow(t, s);
  // lhs: sum_k t^{sk} zeta({s}^k); coefficients bounded by zeta(s)^k/k! <= 2^k/k!
  Ball lhs = Ball::zero(prec);
  for (long k = 0;; ++k) {
    lhs += ball_of_rat(rat_pow(u, k), prec) *
           evaluate_symbolic(period1_reduce(k).instantiate(s), prec);
    Rat next = rat_pow(u, k + 1) * rat_pow(Rat(2), k + 1) / Rat(factorial(k + 1));
    if (next < Rat(1, int_pow(2, static_cast<unsigned long>(prec) + 8)) || k >= 60) {
      Ball tail = ball_of_rat(next * 3, 64);  // e^{u zeta(s)} < 3 envelope
      lhs.add_error(tail.upper());
      break;
    }
  }

  // rhs: partial product times an enclosure of the dropped factors
  Ball ub = ball_of_rat(u, prec);
  Ball rhs = Ball::from_long(1, prec);
  for (long j = 1; j <= product_terms; ++j)
    rhs *= Ball::from_long(1, prec) + ub / Ball::pow_ui(j, s, prec);
  // log of dropped factors lies in [0, u M^{1-s}/(s-1)]
  Ball log_hi = ub / (Ball::pow_ui(product_terms, s - 1, 64) *
                      Ball::from_long(s - 1, 64));
  Ball factor_hi = exp(log_hi.upper());
  Ball half = ball_of_rat(Rat(1, 2), prec);
  Ball mid = (Ball::from_long(1, prec) + factor_hi) * half;
  mid.add_error(((factor_hi - Ball::from_long(1, 64)) * half).upper());
  rhs *= mid;

  CheckResult r = numeric_check(
      "gf_period1",
      {{"s", std::to_string(s)}, {"t", rat_to_string(t)},
       {"terms", std::to_string(product_terms)}},
      lhs, rhs, tol);
  r.seconds = watch.lap();
  return r;
}

CheckResult check_gf_sincs(long n, const Rat& t, long digits, double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  auto [lhs, rhs] = sinc_zeta_product(ball_of_rat(t, prec), n, prec);
  CheckResult r = complex_vs_real_check(
      "gf_sincs", {{"n", std::to_string(n)}, {"t", rat_to_string(t)}},
      lhs.real(), rhs, tol);
  r.seconds = watch.lap();
  return r;
}

CheckResult check_gf_adef(const Rat& z, long pairs, long digits, double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  CBall zc = CBall::from_rats(z, 0, prec);
  CBall gamma_route = a_of_z(zc, prec);
  CBall product_route = a_of_z_product(zc, pairs, prec);
  CheckResult r = numeric_check(
      "gf_adef", {{"z", rat_to_string(z)}, {"pairs", std::to_string(pairs)}},
      gamma_route.real(), product_route.real(), tol);
  if (!imag_small(gamma_route, tol) || !imag_small(product_route, tol)) {
    r.pass = false;
    r.note = "imaginary part fails to vanish";
  }
  r.seconds = watch.lap();
  return r;
}

// ------------------------------------------------------------ reductions

CheckResult check_reduction(const std::string& which, long param, long digits,
                            double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  Composition target;
  Ball rhs = Ball::zero(prec);
  if (which == "euler") {
    target = Composition{{param, 1}};
    rhs = evaluate_symbolic(euler_reduction(param), prec);
  } else if (which == "markett") {
    target = Composition{{param, 1, 1}};
    rhs = evaluate_symbolic(markett_reduction(param), prec);
  } else if (which == "z31") {
    target = repeat_pattern({}, {3, 1}, param);
    rhs = evaluate_pi_multiple(closed_z31(param), prec);
  } else if (which == "z313") {
    target = repeat_pattern({3}, {1, 3}, param);
    rhs = evaluate_symbolic(closed_z313(param), prec);
  } else if (which == "z213") {
    target = repeat_pattern({2}, {1, 3}, param);
    rhs = evaluate_symbolic(closed_z213(param), prec);
  } else {
    throw MzvError(ErrorKind::Parse, "unknown reduction '" + which + "'");
  }
  CheckResult r =
      numeric_check("reduction_" + which, {{"param", std::to_string(param)}},
                    mzv_cached(target, prec), rhs, tol);
  r.seconds = watch.lap();
  return r;
}

std::vector<CheckResult> check_period1_reduction(long s, long max_k) {
  std::vector<CheckResult> out;
  StopWatch watch;
  for (long k = 0; k <= max_k; ++k) {
    ZetaPoly part = period1_reduce(k);
    ZetaPoly newt = period1_reduce_newton(k);
    bool routes_agree = (part == newt);
    bool pi_ok = true;
    std::string lhs_str = part.to_string();
    std::string rhs_str = "newton route";
    if (s == 2) {
      ExactPiMultiple got = pi_form_of_even_poly(part.instantiate(2));
      ExactPiMultiple want = closed_z2block(k);
      pi_ok = got == want;
      lhs_str = got.to_string();
      rhs_str = want.to_string();
    } else if (s == 4) {
      ExactPiMultiple got = pi_form_of_even_poly(part.instantiate(4));
      ExactPiMultiple want = closed_z4block(k);
      pi_ok = got == want;
      lhs_str = got.to_string();
      rhs_str = want.to_string();
    }
    CheckResult r = exact_check(
        "reduction_period1", {{"s", std::to_string(s)}, {"k", std::to_string(k)}},
        routes_agree && pi_ok, lhs_str, rhs_str);
    if (!routes_agree) r.note = "partition and Newton routes disagree";
    r.seconds = watch.lap();
    out.push_back(std::move(r));
  }
  return out;
}

// --------------------------------------------------------- word theorems

namespace {

Word ab_word(long n) {
  Word w;
  for (long i = 0; i < n; ++i) {
    w.letters.push_back(A());
    w.letters.push_back(B());
  }
  return w;
}

}  // namespace

std::vector<CheckResult> check_shuffle_tbinom(long max_m) {
  std::vector<CheckResult> out;
  StopWatch watch;
  for (long m = 0; m <= max_m; ++m) {
    std::map<std::pair<long, long>, NcPoly> lhs, rhs;
    for (long k = 0; k <= m; ++k)
      lhs[{k, m - k}] = shuffle(ab_word(k), ab_word(m - k));
    for (long n = 0; 2 * n <= m; ++n) {
      NcPoly t = t_word_sum(m, n);
      for (long r = 0; r <= m - 2 * n; ++r) {
        GaussRat scale(Rat(binomial(m - 2 * n, r) * int_pow(4, n)));
        NcPoly& slot = rhs[{n + r, m - n - r}];
        slot += t.scaled(scale);
      }
    }
    bool ok = lhs.size() == rhs.size();
    if (ok)
      for (const auto& [key, poly] : lhs) {
        auto it = rhs.find(key);
        if (it == rhs.end() || !(it->second == poly)) {
          ok = false;
          break;
        }
      }
    CheckResult r = exact_check("shuffle_tbinom", {{"m", std::to_string(m)}}, ok,
                                "binomial shuffle sum", "T-word expansion");
    r.seconds = watch.lap();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_shuffle_mfact(long max_degree) {
  std::vector<CheckResult> out;
  StopWatch watch;
  std::vector<NcPoly> a_words = broadhurst_a_words(max_degree);
  std::vector<NcPoly> m_words = broadhurst_m_words(max_degree);
  GaussRat g1(Rat(1, 2), Rat(1, 2));    // 1/(1-i)
  GaussRat g2(Rat(1, 2), Rat(-1, 2));   // 1/(1+i)
  for (long d = 0; d <= max_degree; ++d) {
    NcPoly conv;
    for (long p = 0; p <= d; ++p) {
      GaussRat scale = gauss_pow(g1, p) * gauss_pow(g2, d - p);
      conv += shuffle(a_words[p], a_words[d - p]).scaled(scale);
    }
    bool ok = (conv == m_words[d]);
    CheckResult r = exact_check("shuffle_mfact", {{"degree", std::to_string(d)}},
                                ok, conv.to_string(), m_words[d].to_string());
    r.seconds = watch.lap();
    out.push_back(std::move(r));
  }
  return out;
}

// --------------------------------------------------------- new integral

CheckResult check_new_integral(const Composition& s, const std::vector<Rat>& xs,
                               long order, long digits, double tol) {
  StopWatch watch;
  Prec prec = digits_to_bits(digits);
  Ball quad = new_integral_eval(s, xs, order, prec);
  std::vector<CBall> z;
  for (const Rat& x : xs) z.push_back(CBall::from_rats(x, 0, prec));
  CBall series = multiple_polylog_eval(s.parts, z, prec);
  std::ostringstream xstr;
  for (size_t i = 0; i < xs.size(); ++i)
    xstr << (i ? ";" : "") << rat_to_string(xs[i]);
  CheckResult r = numeric_check(
      "new_integral",
      {{"s", s.to_string()}, {"x", xstr.str()}, {"order", std::to_string(order)}},
      quad, series.real(), tol);
  r.note = r.note.empty() ? "quadrature radius is an order-doubling estimate"
                          : r.note;
  r.seconds = watch.lap();
  return r;
}

// -------------------------------------------------------------- q-checks

std::vector<CheckResult> check_q_shuffle_all(long max_len, const Rat& x,
                                             const Rat& q) {
  StopWatch watch;
  const std::vector<char> alphabet{'a', 'b', 'c'};
  std::vector<std::vector<Word>> by_len(max_len + 1);
  by_len[0].push_back(Word{});
  for (long l = 1; l <= max_len; ++l)
    for (const Word& w : by_len[l - 1])
      for (char c : alphabet) {
        Word e = w;
        e.letters.push_back(Letter{c, 0});
        by_len[l].push_back(e);
      }

  long checked = 0, failed = 0;
  for (long lu = 1; lu < max_len; ++lu)
    for (long lv = 1; lu + lv <= max_len; ++lv)
      for (const Word& u : by_len[lu])
        for (const Word& v : by_len[lv]) {
          Rat lhs = q_word_value_exact(qshuffle(u, v), x, q);
          Rat rhs = q_word_value_exact(u, x, q) * q_word_value_exact(v, x, q);
          ++checked;
          if (lhs != rhs) ++failed;
        }
  CheckResult r = exact_check(
      "q_shuffle",
      {{"max_len", std::to_string(max_len)}, {"x", rat_to_string(x)},
       {"q", rat_to_string(q)}},
      failed == 0, std::to_string(checked) + " products",
      "pointwise factorization");
  r.residual = failed;
  r.seconds = watch.lap();
  return {r};
}

CheckResult check_q_worked_example() {
  StopWatch watch;
  // u = t^0 d_q t, v = t^1 d_q t at x = 1, q = 1/2:
  // the two q-shuffle terms evaluate to 8/21 and 2/7 and add to 2/3.
  Word u = Word::parse("a");
  Word v = Word::parse("b");
  Rat x(1), q(1, 2);
  Word ab = Word::parse("ab");
  Word b_eta_a{{Letter{'b', 0}, Letter{'a', 1}}};
  bool ok = q_word_value_exact(ab, x, q) == Rat(8, 21) &&
            q_word_value_exact(b_eta_a, x, q) == Rat(2, 7) &&
            q_word_value_exact(qshuffle(u, v), x, q) == Rat(2, 3) &&
            q_word_value_exact(u, x, q) * q_word_value_exact(v, x, q) == Rat(2, 3);
  CheckResult r = exact_check("q_worked_example", {}, ok, "8/21 + 2/7", "2/3");
  r.seconds = watch.lap();
  return r;
}

CheckResult check_q_expansions(const Rat& x, const Rat& q) {
  StopWatch watch;
  // w1 qsh w2 w3 with the three monomial forms t^0, t^1, t^2
  Word w1 = Word::parse("a");
  Word w23 = Word::parse("bc");
  NcPoly canonical = qshuffle(w1, w23);

  auto word3 = [](Letter a, Letter b, Letter c) {
    return Word{{a, b, c}};
  };
  Letter l1{'a', 0}, l2{'b', 0}, l3{'c', 0};
  Letter e1{'a', 1}, e3{'c', 1}, ee1{'a', 2};
  NcPoly first;  // w1 w2 w3 + w2 (eta w1) w3 + w2 w3 (eta^2 w1)
  first.add_term(word3(l1, l2, l3), GaussRat(1));
  first.add_term(word3(l2, e1, l3), GaussRat(1));
  first.add_term(word3(l2, l3, ee1), GaussRat(1));
  NcPoly second;  // w1 w2 w3 + w2 eta(w1 w3) + w2 w3 (eta w1)
  second.add_term(word3(l1, l2, l3), GaussRat(1));
  second.add_term(word3(l2, e1, e3), GaussRat(1));
  second.add_term(word3(l2, l3, e1), GaussRat(1));

  bool formal = (canonical == first);
  bool semantic = q_word_value_exact(first, x, q) == q_word_value_exact(second, x, q) &&
                  q_word_value_exact(canonical, x, q) ==
                      q_word_value_exact(w1, x, q) * q_word_value_exact(w23, x, q);
  CheckResult r = exact_check(
      "q_expansions", {{"x", rat_to_string(x)}, {"q", rat_to_string(q)}},
      formal && semantic, "canonical recursion", "alternative expansion");
  if (!formal) r.note = "canonical expansion mismatch";
  r.seconds = watch.lap();
  return r;
}

CheckResult check_q_limit(long steps) {
  StopWatch watch;
  bool ok = true;
  for (const char* text : {"b", "ab"}) {
    Word w = Word::parse(text);
    Rat classical = classical_word_value(w, 1);
    Rat prev_err = 0;
    for (long j = 2; j <= steps; ++j) {
      Rat q = 1 - Rat(1, int_pow(2, j));
      Rat err = abs(q_word_value_exact(w, Rat(1), q) - classical);
      if (j > 2 && !(err <= prev_err * Rat(3, 4))) ok = false;
      prev_err = err;
    }
    // O(1-q): the last error shrank by about 2^-(steps-2)
    if (!(prev_err <= Rat(4) / Rat(int_pow(2, steps)))) ok = false;
  }
  CheckResult r = exact_check("q_limit", {{"steps", std::to_string(steps)}}, ok,
                              "q-integral values", "classical iterated integral");
  r.seconds = watch.lap();
  return r;
}

// ----------------------------------------------------------- arithmetic

CheckResult check_stuffle_counts(long max_m, long max_n) {
  StopWatch watch;
  long failures = 0;
  for (long m = 0; m <= max_m; ++m)
    for (long n = 0; n <= max_n; ++n) {
      Int c1 = stuffle_count_closed1(m, n);
      Int c2 = stuffle_count_closed2(m, n);
      Int c3 = stuffle_count_recursive(m, n);
      Int sym = stuffle_count_closed1(n, m);
      if (c1 != c2 || c1 != c3 || c1 != sym) ++failures;
      Composition u, v;
      for (long i = 0; i < m; ++i) u.parts.push_back(1);
      for (long i = 0; i < n; ++i) v.parts.push_back(1);
      if (Int(stuffle(u, v).size()) != c1) ++failures;
    }
  CheckResult r = exact_check(
      "stuffle_counts", {{"max_m", std::to_string(max_m)}, {"max_n", std::to_string(max_n)}},
      failures == 0, "closed forms / recursion", "brute-force multiset size");
  r.residual = failures;
  r.seconds = watch.lap();
  return r;
}

namespace {

Int lattice_count_abs(long m, long n) {
  if (m == 0) return 1;
  Int total = 0;
  for (long v = -n; v <= n; ++v) total += lattice_count_abs(m - 1, n - std::abs(v));
  return total;
}

}  // namespace

CheckResult check_lattice_counts(long max_m, long max_n) {
  StopWatch watch;
  long failures = 0;
  for (long m = 0; m <= max_m; ++m)
    for (long n = 0; n <= max_n; ++n)
      if (lattice_count_abs(m, n) != stuffle_count_closed2(m, n)) ++failures;
  CheckResult r = exact_check(
      "lattice_counts",
      {{"max_m", std::to_string(max_m)}, {"max_n", std::to_string(max_n)}},
      failures == 0, "|{b : sum |b_j| <= n}|", "f(m,n)");
  r.residual = failures;
  r.seconds = watch.lap();
  return r;
}

CheckResult check_tau(long max_m, long max_k) {
  StopWatch watch;
  long failures = 0;
  for (long k = 1; k <= max_k; ++k)
    for (long m = 1; m <= max_m; ++m)
      if (tau_factorizations(m, k) != tau_factorizations_enumerate(m, k))
        ++failures;
  bool spot = tau_factorizations(12, 2) == 3;
  CheckResult r = exact_check(
      "tau_factorizations",
      {{"max_m", std::to_string(max_m)}, {"max_k", std::to_string(max_k)}},
      failures == 0 && spot, "partition/divisor formula", "distinct-factor enumeration");
  r.residual = failures;
  r.seconds = watch.lap();
  return r;
}

std::vector<CheckResult> check_nonpositive_limits(long max_n) {
  std::vector<CheckResult> out;
  StopWatch watch;
  CheckResult pinned = exact_check(
      "nonpositive_limits", {{"case", "(0,2)"}},
      nonpositive_limit(0, 2, LimitOrder::s1_first) == Rat(1, 3) &&
          nonpositive_limit(0, 2, LimitOrder::sk_first) == Rat(5, 12),
      "1/3", "5/12");
  pinned.seconds = watch.lap();
  out.push_back(std::move(pinned));

  long failures = 0;
  for (long n = 0; n <= max_n; ++n) {
    // zeta(0) = -1/2; for n >= 1 the classical -B_{n+1}/(n+1)
    Rat classical = n == 0 ? Rat(-1, 2) : -bernoulli(n + 1) / Rat(n + 1);
    if (nonpositive_limit(n, 1, LimitOrder::s1_first) != classical) ++failures;
    if (nonpositive_limit(n, 1, LimitOrder::sk_first) != classical) ++failures;
  }
  CheckResult depth1 = exact_check(
      "nonpositive_limits", {{"case", std::string("k=1,n<=") + std::to_string(max_n)}},
      failures == 0, "both limit orders", "-B_{n+1}/(n+1)");
  depth1.residual = failures;
  depth1.seconds = watch.lap();
  out.push_back(std::move(depth1));
  return out;
}

std::vector<CheckResult> check_dimension_tables(long max_weight, long max_depth) {
  std::vector<CheckResult> out;
  StopWatch watch;

  auto value_of = [](const std::vector<DimEntry>& table, long w, long k) -> long {
    for (const DimEntry& e : table)
      if (e.weight == w && e.depth == k) return e.value;
    return 0;
  };

  auto table_mzv = dimension_exponents(DimTarget::mzv_basis, max_weight, max_depth);
  auto table_clausen = dimension_exponents(DimTarget::clausen, max_weight, max_depth);
  bool spots = value_of(table_mzv, 3, 1) == 1 && value_of(table_mzv, 5, 1) == 1 &&
               value_of(table_clausen, 2, 1) == 1;
  CheckResult spot = exact_check(
      "dimension_tables", {{"case", "spot_values"}}, spots,
      "D(3,1)=D(5,1)=1, P(2,1)=1", "extracted exponents");
  spot.seconds = watch.lap();
  out.push_back(std::move(spot));

  // round-trip: rebuilding the product from the table reproduces the
  // conjectured right-hand side exactly (within the truncation box)
  for (DimTarget target : {DimTarget::mzv_basis, DimTarget::mzv_via_euler,
                           DimTarget::euler_basis, DimTarget::clausen}) {
    auto table = dimension_exponents(target, max_weight, max_depth);
    std::vector<std::vector<Rat>> prod(max_weight + 1,
                                       std::vector<Rat>(max_depth + 1, Rat(0)));
    prod[0][0] = 1;
    for (const DimEntry& e : table) {
      // multiply by (1 - x^w y^k)^{value}; negative exponents go through
      // the geometric series
      std::vector<std::vector<Rat>> next(max_weight + 1,
                                         std::vector<Rat>(max_depth + 1, Rat(0)));
      std::vector<Rat> binom_coeffs;
      long jmax = std::min(max_weight / e.weight, max_depth / e.depth);
      for (long j = 0; j <= jmax; ++j) {
        Rat c;
        if (e.value >= 0) {
          c = Rat(binomial(e.value, j));
          if (j % 2 != 0) c = -c;
        } else {
          c = Rat(binomial(-e.value + j - 1, j));
        }
        binom_coeffs.push_back(c);
      }
      for (long w = 0; w <= max_weight; ++w)
        for (long k = 0; k <= max_depth; ++k) {
          if (prod[w][k] == 0) continue;
          for (long j = 0; j < static_cast<long>(binom_coeffs.size()); ++j) {
            long ww = w + j * e.weight, kk = k + j * e.depth;
            if (ww > max_weight || kk > max_depth) break;
            next[ww][kk] += prod[w][k] * binom_coeffs[j];
          }
        }
      prod = std::move(next);
    }
    auto rhs = conjectured_product_coeffs(target, max_weight, max_depth);
    bool ok = true;
    for (long w = 0; w <= max_weight && ok; ++w)
      for (long k = 0; k <= max_depth && ok; ++k)
        if (prod[w][k] != rhs[w][k]) ok = false;
    CheckResult r = exact_check(
        "dimension_tables", {{"case", std::string("roundtrip_") + dim_target_name(target)}},
        ok, "product of (1-x^n y^k)^E", "conjectured closed form");
    r.seconds = watch.lap();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mzv
