#include "mzv/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace mzv {

namespace {

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence, plain mpfr.
void legendre_pair(mpfr_t pn, mpfr_t pnm1, const mpfr_t x, long n, Prec wp) {
  mpfr_t p0, p1, tmp;
  mpfr_init2(p0, wp);
  mpfr_init2(p1, wp);
  mpfr_init2(tmp, wp);
  mpfr_set_ui(p0, 1, MPFR_RNDN);
  mpfr_set(p1, x, MPFR_RNDN);
  for (long k = 1; k < n; ++k) {
    // (k+1) p_{k+1} = (2k+1) x p_k - k p_{k-1}
    mpfr_mul(tmp, x, p1, MPFR_RNDN);
    mpfr_mul_ui(tmp, tmp, 2 * k + 1, MPFR_RNDN);
    mpfr_mul_ui(p0, p0, k, MPFR_RNDN);
    mpfr_sub(tmp, tmp, p0, MPFR_RNDN);
    mpfr_div_ui(tmp, tmp, k + 1, MPFR_RNDN);
    mpfr_set(p0, p1, MPFR_RNDN);
    mpfr_set(p1, tmp, MPFR_RNDN);
  }
  mpfr_set(pn, p1, MPFR_RNDN);
  mpfr_set(pnm1, p0, MPFR_RNDN);
  mpfr_clears(p0, p1, tmp, nullptr);
}

GaussLegendreRule compute_rule(long order, Prec prec) {
  Prec wp = prec + 32;
  GaussLegendreRule rule;
  rule.nodes.reserve(order);
  rule.weights.reserve(order);

  mpfr_t x, pn, pnm1, dp, delta, tmp;
  mpfr_inits2(wp, x, pn, pnm1, dp, delta, tmp, nullptr);

  for (long i = 1; i <= order; ++i) {
    double guess = std::cos(M_PI * (i - 0.25) / (order + 0.5));
    mpfr_set_d(x, guess, MPFR_RNDN);
    for (int it = 0; it < 128; ++it) {
      legendre_pair(pn, pnm1, x, order, wp);
      // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
      mpfr_mul(dp, x, pn, MPFR_RNDN);
      mpfr_sub(dp, dp, pnm1, MPFR_RNDN);
      mpfr_mul_ui(dp, dp, order, MPFR_RNDN);
      mpfr_mul(tmp, x, x, MPFR_RNDN);
      mpfr_sub_ui(tmp, tmp, 1, MPFR_RNDN);
      mpfr_div(dp, dp, tmp, MPFR_RNDN);
      mpfr_div(delta, pn, dp, MPFR_RNDN);
      mpfr_sub(x, x, delta, MPFR_RNDN);
      if (mpfr_zero_p(delta) ||
          mpfr_get_exp(delta) < -(static_cast<long>(wp) - 16))
        break;
    }
    legendre_pair(pn, pnm1, x, order, wp);
    mpfr_mul(dp, x, pn, MPFR_RNDN);
    mpfr_sub(dp, dp, pnm1, MPFR_RNDN);
    mpfr_mul_ui(dp, dp, order, MPFR_RNDN);
    mpfr_mul(tmp, x, x, MPFR_RNDN);
    mpfr_sub_ui(tmp, tmp, 1, MPFR_RNDN);
    mpfr_div(dp, dp, tmp, MPFR_RNDN);

    Ball node(wp);
    mpfr_set(node.mid(), x, MPFR_RNDN);
    node.add_error_2exp(mpfr_get_exp(x) - (wp - 24));

    // w = 2 / ((1 - x^2) P'_n(x)^2)
    mpfr_neg(tmp, tmp, MPFR_RNDN);  // 1 - x^2
    mpfr_mul(dp, dp, dp, MPFR_RNDN);
    mpfr_mul(tmp, tmp, dp, MPFR_RNDN);
    mpfr_ui_div(tmp, 2, tmp, MPFR_RNDN);
    Ball weight(wp);
    mpfr_set(weight.mid(), tmp, MPFR_RNDN);
    weight.add_error_2exp(mpfr_get_exp(tmp) - (wp - 24));

    rule.nodes.push_back(std::move(node));
    rule.weights.push_back(std::move(weight));
  }
  mpfr_clears(x, pn, pnm1, dp, delta, tmp, nullptr);
  return rule;
}

}  // namespace

GaussLegendreRule gauss_legendre(long order, Prec prec) {
  static std::map<std::pair<long, Prec>, GaussLegendreRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(order, prec);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_rule(order, prec)).first;
  return it->second;
}

namespace {

// One tensor quadrature pass at the given order.
Ball tensor_pass(const Composition& s, const std::vector<Ball>& x_prefix,
                 long order, Prec wp) {
  long k = s.depth();
  long dim = s.weight();
  GaussLegendreRule rule = gauss_legendre(order, wp);

  // map (-1,1) -> (0,1)
  Ball half = Ball::from_rat(Rat(1, 2), wp);
  std::vector<Ball> u, w;
  for (long i = 0; i < order; ++i) {
    u.push_back((rule.nodes[i] + Ball::from_long(1, wp)) * half);
    w.push_back(rule.weights[i] * half);
  }

  std::vector<long> idx(dim, 0);
  Ball acc = Ball::zero(wp);
  Ball one = Ball::from_long(1, wp);
  for (;;) {
    // integrand: prod_j tau(X_j P_j) / Q_j, with Q_j the product of the
    // j-th chain's variables and P_j the product of Q_1..Q_j
    Ball weight = one;
    for (long d = 0; d < dim; ++d) weight *= w[idx[d]];
    Ball val = one;
    Ball p_run = one;
    long pos = 0;
    for (long j = 0; j < k; ++j) {
      Ball q = one;
      for (long i = 0; i < s.parts[j]; ++i) q *= u[idx[pos++]];
      p_run *= q;
      Ball y = x_prefix[j] * p_run;
      val *= y / ((one - y) * q);
    }
    acc += weight * val;

    long d = 0;
    while (d < dim && ++idx[d] == order) idx[d++] = 0;
    if (d == dim) break;
  }
  return acc;
}

}  // namespace

Ball new_integral_eval(const Composition& s, const std::vector<Rat>& xs,
                       long quad_order, Prec prec) {
  long k = s.depth();
  if (k < 1 || k > 2)
    throw MzvError(ErrorKind::Unsupported, "integral route supports depth <= 2");
  for (long p : s.parts)
    if (p > 3)
      throw MzvError(ErrorKind::Unsupported, "integral route supports parts <= 3");
  if (static_cast<long>(xs.size()) != k)
    throw MzvError(ErrorKind::BadArity, "need one x per argument");
  for (const Rat& x : xs)
    if (!(x > 0 && x < 1))
      throw MzvError(ErrorKind::OutOfDomain, "x_j must lie in (0,1)");

  Prec wp = prec + 8;
  std::vector<Ball> x_prefix;
  Rat run = 1;
  for (const Rat& x : xs) {
    run *= x;
    x_prefix.push_back(Ball::from_rat(run, wp));
  }

  long g = std::max<long>(8, quad_order);
  Ball coarse = tensor_pass(s, x_prefix, g, wp);
  Ball fine = tensor_pass(s, x_prefix, 2 * g, wp);
  // order-doubling error estimate; NOT a rigorous enclosure
  Ball diff = abs(Ball::mid_distance(fine, coarse));
  fine.add_error((diff + diff).upper());
  return fine;
}

}  // namespace mzv
