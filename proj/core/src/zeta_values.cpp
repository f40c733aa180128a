#include "mzv/zeta_values.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "mzv/combinatorics.hpp"
#include "mzv/symbolic.hpp"

namespace mzv {

namespace {

// Direct series with the integral tail bound; only worthwhile when s is
// large enough that a few hundred terms reach full precision.
Ball zeta_direct(long s, Prec prec, long terms) {
  Ball acc = Ball::zero(prec);
  for (long n = 1; n <= terms; ++n)
    acc += Ball::from_long(1, prec) / Ball::pow_ui(n, s, prec);
  // tail <= M^{1-s}/(s-1)
  Ball tail = Ball::from_long(1, prec) /
              (Ball::pow_ui(terms, s - 1, prec) * Ball::from_long(s - 1, prec));
  acc.add_error(tail.upper());
  return acc;
}

}  // namespace

Ball zeta_euler_maclaurin(long s, Prec prec) {
  if (s <= 1) throw MzvError(ErrorKind::Divergent, "zeta needs s >= 2");
  Prec wp = prec + 16;
  long beta = static_cast<long>(wp) + 8;

  // large s: plain summation converges fast enough
  if (s - 1 >= 8) {
    double need = static_cast<double>(beta) / static_cast<double>(s - 1);
    if (need < 11) {  // at most ~2048 terms
      long terms = static_cast<long>(std::ldexp(1.0, static_cast<int>(need) + 1)) + 4;
      return zeta_direct(s, wp, terms);
    }
  }

  long J = beta / 5 + 4;
  long N = 2 * J + 8;
  for (int attempt = 0;; ++attempt) {
    Ball acc = Ball::zero(wp);
    for (long n = 1; n < N; ++n)
      acc += Ball::from_long(1, wp) / Ball::pow_ui(n, s, wp);
    Ball npow = Ball::pow_ui(N, s - 1, wp);  // N^{s-1}
    acc += Ball::from_long(1, wp) / (npow * Ball::from_long(s - 1, wp));
    Ball nms = Ball::from_long(1, wp) / (npow * Ball::from_long(N, wp));  // N^{-s}
    acc += nms / Ball::from_long(2, wp);

    // correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    Rat rising = Rat(s);  // s(s+1)...(s+2j-2), here at j = 1
    Ball nfac = nms * Ball::from_long(N, wp);  // N^{-s+1}, then / N^2 each step
    Ball n2 = Ball::from_long(N, wp) * Ball::from_long(N, wp);
    for (long j = 1; j <= J; ++j) {
      if (j > 1) rising *= Rat(s + 2 * j - 3) * Rat(s + 2 * j - 2);
      nfac /= n2;  // N^{-s-2j+1}
      Rat coeff = bernoulli(2 * j) / Rat(factorial(2 * j)) * rising;
      acc += Ball::from_rat(coeff, wp) * nfac;
    }
    // remainder bound: 2x the first omitted term
    Rat rem_rising = rising * Rat(s + 2 * J - 1) * Rat(s + 2 * J);
    Rat rem_coeff = bernoulli(2 * J + 2) / Rat(factorial(2 * J + 2)) * rem_rising;
    Ball rem = Ball::from_rat(2 * abs(rem_coeff), wp) * abs(nfac / n2);
    acc.add_error(rem.upper());

    if (acc.rad_exponent() <= -(static_cast<long>(wp) - 8) || attempt >= 3)
      return acc;
    N *= 2;
  }
}

Ball zeta_riemann(long s, Prec prec) {
  if (s <= 1) throw MzvError(ErrorKind::Divergent, "zeta needs s >= 2");
  if (s % 2 == 0) {
    ExactPiMultiple e = zeta_even_exact(s / 2);
    return Ball::from_rat(e.coeff, prec + 8) *
           pow_si(Ball::pi(prec + 8), e.power);
  }
  return zeta_euler_maclaurin(s, prec);
}

std::vector<Ball> zeta_table(long kmax, Prec prec) {
  static std::map<std::pair<long, Prec>, Ball> cache;
  static std::mutex mu;
  std::vector<Ball> out;
  out.reserve(std::max<long>(0, kmax - 1));
  std::lock_guard<std::mutex> lock(mu);
  for (long k = 2; k <= kmax; ++k) {
    auto key = std::make_pair(k, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, zeta_riemann(k, prec)).first;
    out.push_back(it->second);
  }
  return out;
}

bool convergence_region(const std::vector<double>& realparts) {
  double partial = 0;
  for (size_t r = 0; r < realparts.size(); ++r) {
    partial += realparts[r];
    if (!(partial > static_cast<double>(r + 1))) return false;
  }
  return true;
}

}  // namespace mzv
