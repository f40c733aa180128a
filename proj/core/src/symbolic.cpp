#include "mzv/symbolic.hpp"

#include <sstream>

#include "mzv/combinatorics.hpp"
#include "mzv/zeta_values.hpp"

namespace mzv {

ZetaPoly ZetaPoly::constant(const Rat& c) {
  ZetaPoly p;
  if (c != 0) p.terms_[Monomial{}] = c;
  return p;
}

ZetaPoly ZetaPoly::zeta(long k) {
  if (k < 2) throw MzvError(ErrorKind::OutOfDomain, "zeta symbol needs k >= 2");
  ZetaPoly p;
  p.terms_[Monomial{{ZetaSym{k, false}, 1}}] = 1;
  return p;
}

ZetaPoly ZetaPoly::zeta_formal(long j) {
  if (j < 1) throw MzvError(ErrorKind::OutOfDomain, "formal multiplier >= 1");
  ZetaPoly p;
  p.terms_[Monomial{{ZetaSym{j, true}, 1}}] = 1;
  return p;
}

Rat ZetaPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ZetaPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      ZetaPoly::Monomial m = ma;
      for (const auto& [sym, e] : mb) m[sym] += e;
      r.add_term(m, ca * cb);
    }
  return r;
}

ZetaPoly ZetaPoly::scaled(const Rat& c) const {
  ZetaPoly r;
  if (c == 0) return r;
  for (const auto& [m, t] : terms_) r.terms_[m] = t * c;
  return r;
}

ZetaPoly ZetaPoly::pow(long e) const {
  ZetaPoly r = one();
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool ZetaPoly::has_formal() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m)
      if (sym.formal) return true;
  return false;
}

ZetaPoly ZetaPoly::instantiate(long s_value) const {
  ZetaPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (const auto& [sym, e] : m) {
      if (sym.formal) {
        long arg = sym.arg * s_value;
        if (arg < 2)
          throw MzvError(ErrorKind::OutOfDomain,
                         "instantiation gives zeta argument < 2");
        mm[ZetaSym{arg, false}] += e;
      } else {
        mm[sym] += e;
      }
    }
    r.add_term(mm, c);
  }
  return r;
}

std::optional<long> ZetaPoly::homogeneous_weight() const {
  std::optional<long> w;
  for (const auto& [m, c] : terms_) {
    long mw = 0;
    for (const auto& [sym, e] : m) {
      if (sym.formal) return std::nullopt;
      mw += sym.arg * e;
    }
    if (!w)
      w = mw;
    else if (*w != mw)
      return std::nullopt;
  }
  return w;
}

std::string ZetaPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      if (cc < 0) {
        os << " - ";
        cc = -cc;
      } else {
        os << " + ";
      }
    }
    first = false;
    bool unit = (cc == 1) && !m.empty();
    if (!unit) os << rat_to_string(cc);
    bool need_star = !unit;
    for (const auto& [sym, e] : m) {
      if (need_star) os << "*";
      need_star = true;
      os << "z" << sym.arg;
      if (sym.formal) os << "s";
      if (e > 1) os << "^" << e;
    }
    if (m.empty() && unit) os << rat_to_string(cc);
  }
  return os.str();
}

std::string ExactPiMultiple::to_string() const {
  if (coeff == 0) return "0";
  std::ostringstream os;
  os << rat_to_string(coeff);
  if (power != 0) os << " * pi^" << power;
  return os.str();
}

ExactPiMultiple zeta_even_exact(long n) {
  if (n < 1) throw MzvError(ErrorKind::OutOfDomain, "zeta_even_exact needs n >= 1");
  // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
  Rat c = bernoulli(2 * n) * Rat(int_pow(2, 2 * n)) / Rat(2 * factorial(2 * n));
  if (n % 2 == 0) c = -c;
  return {c, 2 * n};
}

ExactPiMultiple pi_form_of_even_poly(const ZetaPoly& p) {
  if (p.is_zero()) return {Rat(0), 0};
  std::optional<long> w = p.homogeneous_weight();
  if (!w)
    throw MzvError(ErrorKind::OutOfDomain,
                   "polynomial is not homogeneous or has formal symbols");
  Rat total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat v = c;
    for (const auto& [sym, e] : m) {
      if (sym.arg % 2 != 0)
        throw MzvError(ErrorKind::OutOfDomain, "odd zeta symbol in pi form");
      v *= rat_pow(zeta_even_exact(sym.arg / 2).coeff, e);
    }
    total += v;
  }
  return {total, *w};
}

// ------------------------------------------------------------------ drin

namespace {

// Bivariate polynomial with ZetaPoly coefficients, truncated to x^imax y^jmax.
struct BiSeries {
  long imax, jmax;
  std::vector<ZetaPoly> c;

  BiSeries(long i, long j) : imax(i), jmax(j), c((i + 1) * (j + 1)) {}
  ZetaPoly& at(long i, long j) { return c[i * (jmax + 1) + j]; }
  const ZetaPoly& at(long i, long j) const { return c[i * (jmax + 1) + j]; }

  bool is_zero() const {
    for (const auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }

  BiSeries mul(const BiSeries& o) const {
    BiSeries r(imax, jmax);
    for (long i1 = 0; i1 <= imax; ++i1)
      for (long j1 = 0; j1 <= jmax; ++j1) {
        if (at(i1, j1).is_zero()) continue;
        for (long i2 = 0; i1 + i2 <= imax; ++i2)
          for (long j2 = 0; j1 + j2 <= jmax; ++j2) {
            if (o.at(i2, j2).is_zero()) continue;
            r.at(i1 + i2, j1 + j2) += at(i1, j1) * o.at(i2, j2);
          }
      }
    return r;
  }
};

}  // namespace

ZetaPoly drin_coefficient(long m, long n) {
  if (m < 0 || n < 0) throw MzvError(ErrorKind::OutOfDomain, "need m, n >= 0");
  long I = m + 1, J = n + 1;
  long degree = I + J;

  // E = sum_{k=2}^{degree} (x^k + y^k - (x+y)^k) zeta(k) / k
  BiSeries e(I, J);
  for (long k = 2; k <= degree; ++k) {
    ZetaPoly zk = ZetaPoly::zeta(k).scaled(Rat(1) / Rat(k));
    // x^k and y^k
    if (k <= I) e.at(k, 0) += zk;
    if (k <= J) e.at(0, k) += zk;
    // -(x+y)^k
    for (long i = std::max<long>(0, k - J); i <= std::min(I, k); ++i) {
      long j = k - i;
      e.at(i, j) -= zk.scaled(Rat(binomial(k, i)));
    }
  }

  // exp(E), truncated; E has valuation >= 2 in total degree
  BiSeries expo(I, J);
  expo.at(0, 0) = ZetaPoly::one();
  BiSeries epow = e;
  Rat inv_fact = 1;
  for (long p = 1; 2 * p <= degree && !epow.is_zero(); ++p) {
    inv_fact /= Rat(p);
    for (long i = 0; i <= I; ++i)
      for (long j = 0; j <= J; ++j) expo.at(i, j) += epow.at(i, j).scaled(inv_fact);
    epow = epow.mul(e);
  }

  // 1 - exp(E), coefficient of x^{m+1} y^{n+1}
  return expo.at(I, J).scaled(Rat(-1));
}

ZetaPoly euler_reduction(long m) {
  if (m < 2) throw MzvError(ErrorKind::OutOfDomain, "Euler reduction needs m >= 2");
  ZetaPoly r = ZetaPoly::zeta(m + 1).scaled(Rat(m));
  for (long j = 1; j <= m - 2; ++j) r -= ZetaPoly::zeta(m - j) * ZetaPoly::zeta(j + 1);
  return r.scaled(Rat(1, 2));
}

ZetaPoly markett_reduction(long s) {
  if (s < 3) throw MzvError(ErrorKind::OutOfDomain, "Markett reduction needs s >= 3");
  ZetaPoly r = ZetaPoly::zeta(s + 2).scaled(Rat(s) * Rat(s + 1) / Rat(6));
  r -= (ZetaPoly::zeta(2) * ZetaPoly::zeta(s)).scaled(Rat(s - 1) / Rat(2));
  ZetaPoly mid;
  for (long n = 0; n <= s - 4; ++n) mid += ZetaPoly::zeta(s - n - 1) * ZetaPoly::zeta(n + 3);
  r -= mid.scaled(Rat(s) / Rat(4));
  ZetaPoly tail;
  for (long n = 0; n <= s - 4; ++n) {
    ZetaPoly inner;
    for (long mm = 0; mm <= n; ++mm)
      inner += ZetaPoly::zeta(n - mm + 2) * ZetaPoly::zeta(mm + 2);
    tail += ZetaPoly::zeta(s - n - 2) * inner;
  }
  r += tail.scaled(Rat(1) / Rat(6));
  return r;
}

ZetaPoly period1_reduce(long k) {
  if (k < 0) throw MzvError(ErrorKind::OutOfDomain, "need k >= 0");
  // zeta({s}^k) = (-1)^k sum_{|alpha| = k} c_alpha^{-1} prod_j zeta(alpha_j s)
  ZetaPoly r;
  for (const Partition& a : partitions_calpha(k)) {
    ZetaPoly prod = ZetaPoly::one();
    for (long part : a.parts) prod = prod * ZetaPoly::zeta_formal(part);
    r += prod.scaled(Rat(1) / a.c_alpha);
  }
  if (k % 2 != 0) r = r.scaled(Rat(-1));
  return r;
}

ZetaPoly period1_reduce_newton(long k) {
  // k e_k = sum_{j=1}^{k} (-1)^{j+1} p_j e_{k-j}, e_0 = 1, p_j = zeta(js)
  std::vector<ZetaPoly> e{ZetaPoly::one()};
  for (long i = 1; i <= k; ++i) {
    ZetaPoly acc;
    for (long j = 1; j <= i; ++j) {
      ZetaPoly term = ZetaPoly::zeta_formal(j) * e[i - j];
      if (j % 2 == 0) term = term.scaled(Rat(-1));
      acc += term;
    }
    e.push_back(acc.scaled(Rat(1) / Rat(i)));
  }
  return e[k];
}

ExactPiMultiple closed_z31(long n) {
  if (n < 0) throw MzvError(ErrorKind::OutOfDomain, "need n >= 0");
  return {Rat(2) / Rat(factorial(4 * n + 2)), 4 * n};
}

ExactPiMultiple closed_z4block(long n) {
  ExactPiMultiple z = closed_z31(n);
  z.coeff *= Rat(int_pow(4, n));
  return z;
}

ExactPiMultiple closed_z2block(long m) {
  if (m < 0) throw MzvError(ErrorKind::OutOfDomain, "need m >= 0");
  return {Rat(1) / Rat(factorial(2 * m + 1)), 2 * m};
}

namespace {

// zeta({4}^r) expanded over even zeta symbols.
ZetaPoly zeta4_block_poly(long r) { return period1_reduce(r).instantiate(4); }

}  // namespace

ZetaPoly closed_z313(long n) {
  if (n < 0) throw MzvError(ErrorKind::OutOfDomain, "need n >= 0");
  // 4^{-n} sum_k (-1)^k zeta(4k+3) zeta({4}^{n-k}); equivalently
  // sum_k 2 pi^{4k}/(4k+2)! (-1/4)^{n-k} zeta(4n-4k+3)
  ZetaPoly r;
  for (long k = 0; k <= n; ++k) {
    ZetaPoly term = ZetaPoly::zeta(4 * k + 3) * zeta4_block_poly(n - k);
    if (k % 2 != 0) term = term.scaled(Rat(-1));
    r += term;
  }
  return r.scaled(Rat(1) / Rat(int_pow(4, n)));
}

ZetaPoly closed_z213(long n) {
  if (n < 0) throw MzvError(ErrorKind::OutOfDomain, "need n >= 0");
  ZetaPoly r;
  for (long k = 0; k <= n; ++k) {
    ZetaPoly bracket = ZetaPoly::zeta(4 * k + 2).scaled(Rat(4 * k + 1));
    ZetaPoly inner;
    for (long j = 1; j <= k; ++j)
      inner += ZetaPoly::zeta(4 * j - 1) * ZetaPoly::zeta(4 * k - 4 * j + 3);
    bracket -= inner.scaled(Rat(4));
    ZetaPoly term = zeta4_block_poly(n - k) * bracket;
    if (k % 2 != 0) term = term.scaled(Rat(-1));
    r += term;
  }
  return r.scaled(Rat(1) / Rat(int_pow(4, n)));
}

Ball evaluate_symbolic(const ZetaPoly& p, Prec prec) {
  if (p.has_formal())
    throw MzvError(ErrorKind::OutOfDomain, "cannot evaluate formal symbols");
  Ball acc = Ball::zero(prec);
  for (const auto& [m, c] : p.terms()) {
    Ball t = Ball::from_rat(c, prec);
    for (const auto& [sym, e] : m) t *= pow_si(zeta_riemann(sym.arg, prec), e);
    acc += t;
  }
  return acc;
}

Ball evaluate_pi_multiple(const ExactPiMultiple& p, Prec prec) {
  if (p.coeff == 0) return Ball::zero(prec);
  return Ball::from_rat(p.coeff, prec) * pow_si(Ball::pi(prec), p.power);
}

}  // namespace mzv
