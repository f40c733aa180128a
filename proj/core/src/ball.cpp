#include "mzv/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mzv {

namespace {
// Radius precision.  Radii are magnitude bounds, not values; 32 bits of
// mantissa with upward rounding keeps them sound and cheap.
constexpr Prec kRadPrec = 32;

Prec combine(const Ball& a, const Ball& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

Prec digits_to_bits(long digits) {
  // requested digits + 15 guard digits, in bits
  long d = digits + 15;
  return static_cast<Prec>(d * 3.3219280948873623 + 8);
}

Ball::Ball(Prec prec) {
  mpfr_init2(mid_, std::max<Prec>(prec, MPFR_PREC_MIN));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
  mid_[0] = o.mid_[0];
  rad_[0] = o.rad_[0];
  mpfr_init2(o.mid_, MPFR_PREC_MIN);
  mpfr_init2(o.rad_, kRadPrec);
  mpfr_set_zero(o.mid_, 1);
  mpfr_set_zero(o.rad_, 1);
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this == &o) return *this;
  if (mpfr_get_prec(mid_) != mpfr_get_prec(o.mid_)) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
  }
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

void Ball::bump_ulp(int t) {
  if (t == 0) return;
  if (mpfr_zero_p(mid_)) {
    // Inexact zero can only come from underflow; cover it by the smallest
    // representable magnitude.
    mpfr_t u;
    mpfr_init2(u, kRadPrec);
    mpfr_set_ui_2exp(u, 1, mpfr_get_emin(), MPFR_RNDU);
    mpfr_add(rad_, rad_, u, MPFR_RNDU);
    mpfr_clear(u);
    return;
  }
  add_error_2exp(mpfr_get_exp(mid_) - mpfr_get_prec(mid_));
}

void Ball::add_error_2exp(long e) {
  mpfr_t u;
  mpfr_init2(u, kRadPrec);
  mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
  mpfr_clear(u);
}

void Ball::add_error(const Ball& e) {
  mpfr_t u;
  mpfr_init2(u, kRadPrec);
  mpfr_abs(u, e.mid_, MPFR_RNDU);
  mpfr_add(u, u, e.rad_, MPFR_RNDU);
  mpfr_add(rad_, rad_, u, MPFR_RNDU);
  mpfr_clear(u);
}

bool Ball::contains_zero() const {
  mpfr_t a;
  mpfr_init2(a, kRadPrec);
  mpfr_abs(a, mid_, MPFR_RNDD);
  bool r = mpfr_cmp(a, rad_) <= 0;
  mpfr_clear(a);
  return r;
}

bool Ball::is_positive() const {
  if (mpfr_sgn(mid_) <= 0) return false;
  mpfr_t a;
  mpfr_init2(a, kRadPrec);
  mpfr_set(a, mid_, MPFR_RNDD);
  bool r = mpfr_cmp(a, rad_) > 0;
  mpfr_clear(a);
  return r;
}

bool Ball::is_negative() const { return (-*this).is_positive(); }

Ball Ball::zero(Prec prec) { return Ball(prec); }

Ball Ball::from_long(long v, Prec prec) {
  Ball b(prec);
  int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball Ball::from_double(double v, Prec prec) {
  Ball b(prec);
  int t = mpfr_set_d(b.mid_, v, MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball Ball::from_int(const Int& v, Prec prec) {
  Ball b(prec);
  int t = mpfr_set_z(b.mid_, v.backend().data(), MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball Ball::from_rat(const Rat& v, Prec prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_, v.backend().data(), MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball Ball::pow_ui(unsigned long n, unsigned long e, Prec prec) {
  Ball b(prec);
  mpfr_t base;
  mpfr_init2(base, prec);
  mpfr_set_ui(base, n, MPFR_RNDN);
  int t = mpfr_pow_ui(b.mid_, base, e, MPFR_RNDN);
  mpfr_clear(base);
  b.bump_ulp(t);
  return b;
}

Ball Ball::pi(Prec prec) {
  Ball b(prec);
  int t = mpfr_const_pi(b.mid_, MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball Ball::euler_gamma(Prec prec) {
  Ball b(prec);
  int t = mpfr_const_euler(b.mid_, MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball Ball::log_two(Prec prec) {
  Ball b(prec);
  int t = mpfr_const_log2(b.mid_, MPFR_RNDN);
  b.bump_ulp(t);
  return b;
}

Ball& Ball::operator+=(const Ball& o) {
  if (prec() < o.prec()) {
    Ball r(o.prec());
    int t = mpfr_add(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return *this = std::move(r);
  }
  int t = mpfr_add(mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
  bump_ulp(t);
  return *this;
}

Ball& Ball::operator-=(const Ball& o) {
  if (prec() < o.prec()) {
    Ball r(o.prec());
    int t = mpfr_sub(r.mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, rad_, o.rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return *this = std::move(r);
  }
  int t = mpfr_sub(mid_, mid_, o.mid_, MPFR_RNDN);
  mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
  bump_ulp(t);
  return *this;
}

Ball& Ball::operator*=(const Ball& o) {
  // rad' = |ma| rb + |mb| ra + ra rb, then the midpoint rounding ulp
  mpfr_t t1, t2;
  mpfr_init2(t1, kRadPrec);
  mpfr_init2(t2, kRadPrec);
  mpfr_abs(t1, mid_, MPFR_RNDU);
  mpfr_mul(t1, t1, o.rad_, MPFR_RNDU);
  mpfr_abs(t2, o.mid_, MPFR_RNDU);
  mpfr_mul(t2, t2, rad_, MPFR_RNDU);
  mpfr_add(t1, t1, t2, MPFR_RNDU);
  mpfr_mul(t2, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(t1, t1, t2, MPFR_RNDU);

  int t;
  if (prec() < o.prec()) {
    mpfr_t m;
    mpfr_init2(m, o.prec());
    t = mpfr_mul(m, mid_, o.mid_, MPFR_RNDN);
    mpfr_swap(mid_, m);
    mpfr_clear(m);
  } else {
    t = mpfr_mul(mid_, mid_, o.mid_, MPFR_RNDN);
  }
  mpfr_set(rad_, t1, MPFR_RNDU);
  bump_ulp(t);
  mpfr_clear(t1);
  mpfr_clear(t2);
  return *this;
}

Ball& Ball::operator/=(const Ball& o) {
  // denominator ball must exclude zero
  mpfr_t babs, den, num, t2;
  mpfr_init2(babs, kRadPrec);
  mpfr_abs(babs, o.mid_, MPFR_RNDD);
  if (mpfr_cmp(babs, o.rad_) <= 0) {
    mpfr_clear(babs);
    throw MzvError(ErrorKind::OutOfDomain, "division by ball containing zero");
  }
  mpfr_init2(den, kRadPrec);
  mpfr_init2(num, kRadPrec);
  mpfr_init2(t2, kRadPrec);
  mpfr_sub(den, babs, o.rad_, MPFR_RNDD);
  mpfr_mul(den, den, babs, MPFR_RNDD);
  mpfr_abs(num, mid_, MPFR_RNDU);
  mpfr_mul(num, num, o.rad_, MPFR_RNDU);
  mpfr_abs(t2, o.mid_, MPFR_RNDU);
  mpfr_mul(t2, t2, rad_, MPFR_RNDU);
  mpfr_add(num, num, t2, MPFR_RNDU);
  mpfr_div(num, num, den, MPFR_RNDU);

  int t;
  if (prec() < o.prec()) {
    mpfr_t m;
    mpfr_init2(m, o.prec());
    t = mpfr_div(m, mid_, o.mid_, MPFR_RNDN);
    mpfr_swap(mid_, m);
    mpfr_clear(m);
  } else {
    t = mpfr_div(mid_, mid_, o.mid_, MPFR_RNDN);
  }
  mpfr_set(rad_, num, MPFR_RNDU);
  bump_ulp(t);
  mpfr_clear(babs);
  mpfr_clear(den);
  mpfr_clear(num);
  mpfr_clear(t2);
  return *this;
}

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

Ball abs(const Ball& a) {
  Ball r(a);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);  // exact; radius still valid
  return r;
}

Ball sqrt(const Ball& a) {
  Prec p = a.prec();
  mpfr_t lo, hi, slo, shi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  mpfr_init2(slo, p);
  mpfr_init2(shi, p);
  mpfr_sub(lo, a.mid_, a.rad_, MPFR_RNDD);
  mpfr_add(hi, a.mid_, a.rad_, MPFR_RNDU);
  if (mpfr_sgn(hi) < 0) {
    mpfr_clears(lo, hi, slo, shi, nullptr);
    throw MzvError(ErrorKind::OutOfDomain, "sqrt of negative ball");
  }
  if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1);
  mpfr_sqrt(slo, lo, MPFR_RNDD);
  mpfr_sqrt(shi, hi, MPFR_RNDU);
  Ball r(p);
  int t = mpfr_add(r.mid_, slo, shi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  mpfr_sub(shi, shi, slo, MPFR_RNDU);
  mpfr_div_2ui(shi, shi, 1, MPFR_RNDU);
  mpfr_set(r.rad_, shi, MPFR_RNDU);
  r.bump_ulp(t ? t : 1);
  mpfr_clears(lo, hi, slo, shi, nullptr);
  return r;
}

Ball exp(const Ball& a) {
  Ball r(a.prec());
  int t = mpfr_exp(r.mid_, a.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(a.rad_)) {
    // |exp(m+d) - exp(m)| <= exp(m + r) * r for |d| <= r
    mpfr_t u;
    mpfr_init2(u, kRadPrec);
    mpfr_set(u, a.mid_, MPFR_RNDU);
    mpfr_add(u, u, a.rad_, MPFR_RNDU);
    mpfr_exp(u, u, MPFR_RNDU);
    mpfr_mul(u, u, a.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, u, MPFR_RNDU);
    mpfr_clear(u);
  }
  r.bump_ulp(t);
  return r;
}

Ball log(const Ball& a) {
  if (!a.is_positive())
    throw MzvError(ErrorKind::OutOfDomain, "log of non-positive ball");
  Ball r(a.prec());
  int t = mpfr_log(r.mid_, a.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(a.rad_)) {
    mpfr_t lo;
    mpfr_init2(lo, kRadPrec);
    mpfr_set(lo, a.mid_, MPFR_RNDD);
    mpfr_sub(lo, lo, a.rad_, MPFR_RNDD);
    mpfr_div(lo, a.rad_, lo, MPFR_RNDU);
    mpfr_set(r.rad_, lo, MPFR_RNDU);
    mpfr_clear(lo);
  }
  r.bump_ulp(t);
  return r;
}

Ball sin(const Ball& a) {
  Ball r(a.prec());
  int t = mpfr_sin(r.mid_, a.mid_, MPFR_RNDN);
  mpfr_set(r.rad_, a.rad_, MPFR_RNDU);  // Lipschitz constant 1
  r.bump_ulp(t);
  return r;
}

Ball cos(const Ball& a) {
  Ball r(a.prec());
  int t = mpfr_cos(r.mid_, a.mid_, MPFR_RNDN);
  mpfr_set(r.rad_, a.rad_, MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

namespace {
// Lipschitz bound cosh(|m| + r) for sinh/cosh on the ball.
void hyp_lipschitz(mpfr_t out, const Ball& a) {
  mpfr_abs(out, a.mid(), MPFR_RNDU);
  mpfr_add(out, out, a.rad(), MPFR_RNDU);
  mpfr_cosh(out, out, MPFR_RNDU);
  mpfr_mul(out, out, a.rad(), MPFR_RNDU);
}
}  // namespace

Ball sinh(const Ball& a) {
  Ball r(a.prec());
  int t = mpfr_sinh(r.mid_, a.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(a.rad_)) {
    mpfr_t u;
    mpfr_init2(u, kRadPrec);
    hyp_lipschitz(u, a);
    mpfr_set(r.rad_, u, MPFR_RNDU);
    mpfr_clear(u);
  }
  r.bump_ulp(t);
  return r;
}

Ball cosh(const Ball& a) {
  Ball r(a.prec());
  int t = mpfr_cosh(r.mid_, a.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(a.rad_)) {
    mpfr_t u;
    mpfr_init2(u, kRadPrec);
    hyp_lipschitz(u, a);
    mpfr_set(r.rad_, u, MPFR_RNDU);
    mpfr_clear(u);
  }
  r.bump_ulp(t);
  return r;
}

Ball pow_si(const Ball& a, long e) {
  if (e < 0) return Ball::from_long(1, a.prec()) / pow_si(a, -e);
  Ball r = Ball::from_long(1, a.prec());
  Ball b = a;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Ball Ball::upper() const {
  Ball r(prec());
  mpfr_add(r.mid_, mid_, rad_, MPFR_RNDU);
  return r;
}

Ball Ball::lower() const {
  Ball r(prec());
  mpfr_sub(r.mid_, mid_, rad_, MPFR_RNDD);
  return r;
}

Ball Ball::mid_distance(const Ball& a, const Ball& b) {
  Ball r(combine(a, b));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

bool overlaps(const Ball& a, const Ball& b) {
  mpfr_t d, s;
  mpfr_init2(d, kRadPrec);
  mpfr_init2(s, combine(a, b));
  mpfr_sub(s, a.mid_, b.mid_, MPFR_RNDA);
  mpfr_abs(d, s, MPFR_RNDU);
  mpfr_set_prec(s, kRadPrec);
  mpfr_add(s, a.rad_, b.rad_, MPFR_RNDD);
  bool r = mpfr_cmp(d, s) <= 0;
  mpfr_clear(d);
  mpfr_clear(s);
  return r;
}

bool contains(const Ball& outer, const Ball& inner) {
  mpfr_t d, lhs;
  mpfr_init2(d, combine(outer, inner));
  mpfr_init2(lhs, kRadPrec);
  mpfr_sub(d, inner.mid_, outer.mid_, MPFR_RNDA);
  mpfr_abs(lhs, d, MPFR_RNDU);
  mpfr_add(lhs, lhs, inner.rad_, MPFR_RNDU);
  bool r = mpfr_cmp(lhs, outer.rad_) <= 0;
  mpfr_clear(d);
  mpfr_clear(lhs);
  return r;
}

bool surely_less(const Ball& a, const Ball& b) {
  Ball au = a.upper(), bl = b.lower();
  return mpfr_cmp(au.mid_, bl.mid_) < 0;
}

Rat Ball::mid_rat() const {
  Rat out;
  mpfr_get_q(out.backend().data(), mid_);
  return out;
}

std::string Ball::mid_decimal(long max_digits) const {
  if (mpfr_zero_p(mid_)) return "0";
  char* s = nullptr;
  long digits = max_digits;
  if (!is_exact()) {
    long em = mpfr_get_exp(mid_);
    long er = mpfr_get_exp(rad_);
    long rel = static_cast<long>((em - er) * 0.30102999566398);
    digits = std::clamp(rel, 1L, max_digits);
  }
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), mid_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::rad_decimal() const {
  if (is_exact()) return "0";
  char* s = nullptr;
  mpfr_asprintf(&s, "%.2Re", rad_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::to_string() const {
  long max_digits = static_cast<long>(prec() * 0.30102999566398);
  return mid_decimal(max_digits) + " \xc2\xb1 " + rad_decimal();
}

std::string Ball::mid_hex() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", mid_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Ball::rad_hex() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", rad_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Ball Ball::from_hex(const std::string& mid_hex, const std::string& rad_hex,
                    Prec prec) {
  Ball b(prec);
  if (mpfr_set_str(b.mid_, mid_hex.c_str(), 0, MPFR_RNDN) != 0)
    throw MzvError(ErrorKind::Parse, "bad hex float: " + mid_hex);
  mpfr_t r;
  mpfr_init2(r, kRadPrec);
  if (mpfr_set_str(r, rad_hex.c_str(), 0, MPFR_RNDU) != 0) {
    mpfr_clear(r);
    throw MzvError(ErrorKind::Parse, "bad hex float: " + rad_hex);
  }
  mpfr_set(b.rad_, r, MPFR_RNDU);
  mpfr_clear(r);
  return b;
}

// ---------------------------------------------------------------- CBall

CBall& CBall::operator+=(const CBall& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CBall& CBall::operator-=(const CBall& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CBall& CBall::operator*=(const CBall& o) {
  Ball r = re_ * o.re_ - im_ * o.im_;
  Ball i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

CBall& CBall::operator/=(const CBall& o) {
  Ball den = o.abs_sq();
  Ball r = (re_ * o.re_ + im_ * o.im_) / den;
  Ball i = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

CBall exp(const CBall& a) {
  Ball m = exp(a.real());
  return CBall(m * cos(a.imag()), m * sin(a.imag()));
}

Ball CBall::abs_upper() const { return sqrt(abs_sq()).upper(); }

std::string CBall::to_string() const {
  return re_.to_string() + "  +  (" + im_.to_string() + ") i";
}

}  // namespace mzv
