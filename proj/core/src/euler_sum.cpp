#include "mzv/euler_sum.hpp"

#include <algorithm>
#include <cmath>

namespace mzv {

namespace {

constexpr long kMaxTermsAtOne = 400000;
constexpr Prec kBoundPrec = 64;

// I_j(N) = integral_N^inf t^{-s} (1 + ln t)^j dt, by the parts recursion
//   I_j = N^{1-s} (1+ln N)^j / (s-1) + j/(s-1) I_{j-1}.
// Requires s >= 2.  Everything rounds outward through ball arithmetic.
Ball log_integral_bound(long N, long s, long j) {
  Ball n = Ball::from_long(N, kBoundPrec);
  Ball lg = log(n) + Ball::from_long(1, kBoundPrec);
  Ball npow = Ball::from_long(1, kBoundPrec) / Ball::pow_ui(N, s - 1, kBoundPrec);
  Ball sm1 = Ball::from_long(s - 1, kBoundPrec);
  Ball acc = npow / sm1;  // I_0
  Ball lgp = Ball::from_long(1, kBoundPrec);
  for (long i = 1; i <= j; ++i) {
    lgp *= lg;  // (1+ln N)^i
    acc = npow * lgp / sm1 + acc * Ball::from_long(i, kBoundPrec) / sm1;
  }
  return acc.upper();
}

// t^{-s}(1+ln t)^j is decreasing past exp(j/s - 1); bounds below assume
// monotonicity from N on.
long monotone_floor(long s, long j) {
  double th = std::exp(static_cast<double>(j) / static_cast<double>(s) - 1.0);
  return static_cast<long>(th) + 16;
}

Ball inv_pow(unsigned long n, unsigned long s, Prec prec) {
  return Ball::from_long(1, prec) / Ball::pow_ui(n, s, prec);
}

struct TruncationPlan {
  long terms;
  Ball tail;  // exact upper bound ball (zero radius not required)

  TruncationPlan(long n, Ball t) : terms(n), tail(std::move(t)) {}
};

// x < 1: tail <= sum_{n>N} n^{k-1} x^n <= (N+1)^{k-1} x^{N+1} / (1 - rho)
// with rho = x ((N+1)/N)^{k-1}.
TruncationPlan plan_geometric(const Rat& x, long k, Prec prec) {
  double lx = std::log2(static_cast<double>(numerator(x).convert_to<double>()) /
                        static_cast<double>(denominator(x).convert_to<double>()));
  long bits = static_cast<long>(prec) + 8;
  long N = std::max<long>(4 * k + 16, static_cast<long>(bits / -lx) + 8);
  for (int rounds = 0; rounds < 64; ++rounds) {
    double lhs = (k - 1) * std::log2(static_cast<double>(N + 1)) + (N + 1) * lx;
    if (lhs <= -static_cast<double>(bits)) break;
    N += N / 2 + 16;
  }
  Ball xb = Ball::from_rat(x, kBoundPrec);
  for (;;) {
    Ball ratio = xb;
    Ball scale = Ball::from_long(N + 1, kBoundPrec) / Ball::from_long(N, kBoundPrec);
    ratio *= pow_si(scale, k - 1);
    if (surely_less(ratio, Ball::from_long(1, kBoundPrec))) {
      Ball tail = pow_si(Ball::from_long(N + 1, kBoundPrec), k - 1) *
                  pow_si(xb, N + 1) /
                  (Ball::from_long(1, kBoundPrec) - ratio);
      return TruncationPlan(N, tail.upper());
    }
    N *= 2;
  }
}

// x = 1, sigma_1 = +1, s_1 >= 2:
// tail <= I_{k-1}(N) / (k-1)!  with the log-integral above.
TruncationPlan plan_monotone_at_one(long s1, long k, Prec prec) {
  double digits = static_cast<double>(prec) * 0.30103;
  double expo = digits / static_cast<double>(s1 - 1);
  long N = kMaxTermsAtOne;
  if (expo < 17) N = std::min<long>(N, static_cast<long>(std::pow(10.0, expo)) + 32);
  N = std::max<long>({N, 1024L, monotone_floor(s1, k - 1)});
  Ball tail = log_integral_bound(N, s1, k - 1) /
              Ball::from_int(factorial(k - 1), kBoundPrec);
  return TruncationPlan(N, tail.upper());
}

// x = 1, sigma_1 = -1: paired-term bound.  With
//   h(t) = t^{-s1-1} (1+ln t)^{k-1},
//   C = s1/(k-1)! + [k >= 2] 1/(k-2)!,
// |tail| <= C (h(N+1) + integral_{N+1}^inf h / 2).
TruncationPlan plan_alternating_at_one(long s1, long k, Prec prec) {
  double digits = static_cast<double>(prec) * 0.30103;
  double expo = digits / static_cast<double>(s1 + 1);
  long N = kMaxTermsAtOne;
  if (expo < 17) N = std::min<long>(N, static_cast<long>(std::pow(10.0, expo)) + 32);
  N = std::max<long>({1024L, monotone_floor(s1 + 1, k - 1), N});
  Ball c = Ball::from_rat(Rat(s1) / Rat(factorial(k - 1)), kBoundPrec);
  if (k >= 2)
    c += Ball::from_rat(Rat(1) / Rat(factorial(k - 2)), kBoundPrec);
  Ball lg = log(Ball::from_long(N + 1, kBoundPrec)) + Ball::from_long(1, kBoundPrec);
  Ball h = pow_si(lg, k - 1) / Ball::pow_ui(N + 1, s1 + 1, kBoundPrec);
  Ball tail = c * (h + log_integral_bound(N + 1, s1 + 1, k - 1) /
                           Ball::from_long(2, kBoundPrec));
  return TruncationPlan(N, tail.upper());
}

}  // namespace

Ball euler_sum_eval(const SignedComposition& arg, Prec prec) {
  if (!arg.admissible())
    throw MzvError(ErrorKind::Divergent,
                   "divergent: x=s1=sigma1=1 excluded (" + arg.to_string() + ")");
  long k = arg.depth();
  Prec wp = prec + 24;
  if (k == 0) return Ball::from_long(1, wp);
  if (arg.x == 0) return Ball::zero(wp);

  long s1 = arg.terms[0].s;
  TruncationPlan plan = arg.x < 1 ? plan_geometric(arg.x, k, prec)
                        : (arg.terms[0].sigma < 0
                               ? plan_alternating_at_one(s1, k, prec)
                               : plan_monotone_at_one(s1, k, prec));
  long N = plan.terms;

  // S[j] = sum over n > n_{j+1} > ... > n_k of the inner factors; S[k] = 1.
  std::vector<Ball> S(k + 1, Ball::zero(wp));
  S[k] = Ball::from_long(1, wp);
  Ball total = Ball::zero(wp);
  Ball xb = Ball::from_rat(arg.x, wp);
  Ball xpow = Ball::from_long(1, wp);
  bool x_is_one = (arg.x == 1);

  for (long n = 1; n <= N; ++n) {
    if (!x_is_one) xpow *= xb;
    Ball outer = inv_pow(n, s1, wp) * S[1];
    if (arg.terms[0].sigma < 0 && (n & 1)) outer = -outer;
    if (!x_is_one) outer *= xpow;
    total += outer;
    for (long j = 1; j < k; ++j) {
      Ball inc = inv_pow(n, arg.terms[j].s, wp) * S[j + 1];
      if (arg.terms[j].sigma < 0 && (n & 1)) inc = -inc;
      S[j] += inc;
    }
  }
  total.add_error(plan.tail);
  return total;
}

Ball zeta_x(const Composition& s, const Rat& x, Prec prec) {
  return euler_sum_eval(SignedComposition::from_composition(s, x), prec);
}

Ball word_value_at_half(const Word& w, Prec prec) {
  if (w.empty()) return Ball::from_long(1, prec);
  Composition c = composition_from_word(w);
  return euler_sum_eval(SignedComposition::from_composition(c, Rat(1, 2)), prec);
}

Ball mzv_eval(const Composition& s, Prec prec) {
  if (!s.admissible())
    throw MzvError(ErrorKind::Divergent,
                   "divergent: composition (" + s.to_string() + ") needs s1 >= 2");
  Prec wp = prec + 24;
  Word w = word_from_composition(s);
  long L = w.size();
  // Hoelder convolution at 1/2 over all splits w = u v:
  // each factor is a zeta_{1/2} value, so each piece converges geometrically.
  Ball total = Ball::zero(wp);
  for (long j = 0; j <= L; ++j) {
    Word u = w.prefix(j);
    Word v = w.suffix_from(j);
    Ball left = word_value_at_half(u.reversed().swapped_ab(), wp);
    Ball right = word_value_at_half(v, wp);
    total += left * right;
  }
  return total;
}

// ------------------------------------------------------------- polylog

namespace {

bool exact_real_is(const CBall& z, long v) {
  return z.is_exact() && z.imag().mid_is_zero() &&
         mpfr_cmp_si(z.real().mid(), v) == 0;
}

}  // namespace

CBall multiple_polylog_eval(const std::vector<long>& s,
                            const std::vector<CBall>& z, Prec prec) {
  if (s.size() != z.size())
    throw MzvError(ErrorKind::BadArity, "polylog needs |s| = |z|");
  long k = static_cast<long>(s.size());
  Prec wp = prec + 24;
  if (k == 0) return CBall(Ball::from_long(1, wp));
  for (long v : s)
    if (v < 1) throw MzvError(ErrorKind::OutOfDomain, "exponents must be >= 1");

  // strict route: every prefix product certifiably inside the unit disk
  std::vector<CBall> y;
  y.reserve(k);
  CBall run = CBall::from_long(1, wp);
  Ball rmax = Ball::zero(kBoundPrec);
  bool strict = true;
  for (long j = 0; j < k; ++j) {
    run *= z[j];
    y.push_back(run);
    Ball m = run.abs_upper();
    if (!surely_less(m, Ball::from_long(1, kBoundPrec))) strict = false;
    if (surely_less(rmax, m)) rmax = m.upper();
  }

  if (strict) {
    Rat r = rmax.upper().mid_rat();
    TruncationPlan plan = plan_geometric(r, k, prec);
    long N = plan.terms;
    std::vector<CBall> S(k + 1, CBall::zero(wp));
    S[k] = CBall::from_long(1, wp);
    // zpow[j] tracks z_j^n
    std::vector<CBall> zpow(k, CBall::from_long(1, wp));
    CBall total = CBall::zero(wp);
    for (long n = 1; n <= N; ++n) {
      for (long j = 0; j < k; ++j) zpow[j] *= z[j];
      total += CBall(inv_pow(n, s[0], wp)) * zpow[0] * S[1];
      for (long j = 1; j < k; ++j)
        S[j] += CBall(inv_pow(n, s[j], wp)) * zpow[j] * S[j + 1];
    }
    // plan tail already divides through by nothing; add to both components
    total.real().add_error(plan.tail);
    total.imag().add_error(plan.tail);
    return total;
  }

  // reduction route: z_1 exact real in [-1,1], the rest exactly +-1
  bool reducible = z[0].is_exact() && z[0].imag().mid_is_zero();
  for (long j = 1; j < k && reducible; ++j)
    reducible = exact_real_is(z[j], 1) || exact_real_is(z[j], -1);
  if (reducible) {
    Rat x1 = z[0].real().mid_rat();
    SignedComposition sc;
    sc.x = x1 < 0 ? -x1 : x1;
    if (sc.x > 1) reducible = false;
    if (reducible) {
      sc.terms.push_back({s[0], x1 < 0 ? -1 : 1});
      for (long j = 1; j < k; ++j)
        sc.terms.push_back({s[j], exact_real_is(z[j], -1) ? -1 : 1});
      if (!sc.admissible())
        throw MzvError(ErrorKind::Divergent, "divergent polylog arguments");
      return CBall(euler_sum_eval(sc, prec));
    }
  }
  throw MzvError(ErrorKind::OutOfDomain,
                 "prefix product modulus not certifiably < 1");
}

}  // namespace mzv
