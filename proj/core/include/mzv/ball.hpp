#ifndef MZV_BALL_HPP
#define MZV_BALL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "mzv/rational.hpp"

namespace mzv {

using Prec = mpfr_prec_t;

/// Working bits for a decimal-digit request, including the guard digits
/// added on top of what the caller asked for.
Prec digits_to_bits(long digits);

/// Real ball: arbitrary-precision midpoint plus a nonnegative radius so
/// that the represented value always lies in [mid - rad, mid + rad].
/// Midpoints round to nearest at the ball's precision; every radius
/// operation rounds up, so enclosures survive arithmetic.  Results are
/// deterministic for a fixed precision.
class Ball {
 public:
  explicit Ball(Prec prec = 64);
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  ~Ball();
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;

  Prec prec() const { return mpfr_get_prec(mid_); }
  bool is_exact() const { return mpfr_zero_p(rad_); }
  bool mid_is_zero() const { return mpfr_zero_p(mid_); }
  bool contains_zero() const;
  /// True when every point of the ball is > 0 (resp. < 0).
  bool is_positive() const;
  bool is_negative() const;

  static Ball zero(Prec prec);
  static Ball from_long(long v, Prec prec);
  static Ball from_double(double v, Prec prec);
  static Ball from_int(const Int& v, Prec prec);
  static Ball from_rat(const Rat& v, Prec prec);
  /// n^e as a ball (n > 0).
  static Ball pow_ui(unsigned long n, unsigned long e, Prec prec);

  static Ball pi(Prec prec);
  static Ball euler_gamma(Prec prec);
  static Ball log_two(Prec prec);

  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  Ball& operator/=(const Ball& o);
  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
  friend Ball operator/(Ball a, const Ball& b) { return a /= b; }
  Ball operator-() const;

  friend Ball abs(const Ball& a);
  friend Ball sqrt(const Ball& a);
  friend Ball exp(const Ball& a);
  friend Ball log(const Ball& a);  // requires a strictly positive
  friend Ball sin(const Ball& a);
  friend Ball cos(const Ball& a);
  friend Ball sinh(const Ball& a);
  friend Ball cosh(const Ball& a);
  friend Ball pow_si(const Ball& a, long e);

  /// Widens the radius by |e| (its upper bound, midpoint included).
  void add_error(const Ball& e);
  void add_error_2exp(long e);  // rad += 2^e

  /// Exact ball at the upper (resp. lower) end: mid + rad (mid - rad).
  Ball upper() const;
  Ball lower() const;

  /// mid(a) - mid(b) ignoring radii; used for residuals.
  static Ball mid_distance(const Ball& a, const Ball& b);

  /// Certified |a - b| <= rad(a) + rad(b): the two balls overlap.
  friend bool overlaps(const Ball& a, const Ball& b);
  /// Certified: every point of `inner` lies in `outer`.
  friend bool contains(const Ball& outer, const Ball& inner);
  /// Certified strict midpoint comparison including radii (a < b surely).
  friend bool surely_less(const Ball& a, const Ball& b);

  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double_upper() const { return mpfr_get_d(rad_, MPFR_RNDU); }
  /// Binary exponent of the radius; very small when the ball is exact.
  long rad_exponent() const {
    return mpfr_zero_p(rad_) ? mpfr_get_emin() : mpfr_get_exp(rad_);
  }
  /// The midpoint as an exact rational (midpoints are dyadic).
  Rat mid_rat() const;

  std::string to_string() const;
  std::string mid_decimal(long max_digits) const;
  std::string rad_decimal() const;
  std::string mid_hex() const;  // exact round-trip form
  std::string rad_hex() const;
  static Ball from_hex(const std::string& mid_hex, const std::string& rad_hex,
                       Prec prec);

  // Low-level access for the numeric kernels in this library.
  mpfr_ptr mid() { return mid_; }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_ptr rad() { return rad_; }
  mpfr_srcptr rad() const { return rad_; }
  /// Accounts for the rounding of the last midpoint operation (ternary
  /// value `t`) by adding one ulp of the midpoint to the radius.
  void bump_ulp(int t);

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

/// Rectangular complex ball.
class CBall {
 public:
  explicit CBall(Prec prec = 64) : re_(prec), im_(prec) {}
  CBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit CBall(Ball re) : re_(std::move(re)), im_(Ball::zero(re_.prec())) {}

  static CBall zero(Prec prec) { return CBall(Ball::zero(prec)); }
  static CBall from_long(long v, Prec prec) {
    return CBall(Ball::from_long(v, prec));
  }
  static CBall from_rats(const Rat& re, const Rat& im, Prec prec) {
    return CBall(Ball::from_rat(re, prec), Ball::from_rat(im, prec));
  }
  static CBall i(Prec prec) {
    return CBall(Ball::zero(prec), Ball::from_long(1, prec));
  }

  const Ball& real() const { return re_; }
  const Ball& imag() const { return im_; }
  Ball& real() { return re_; }
  Ball& imag() { return im_; }
  Prec prec() const { return re_.prec(); }

  bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
  bool contains_zero() const {
    return re_.contains_zero() && im_.contains_zero();
  }

  CBall conj() const { return CBall(re_, -im_); }
  CBall operator-() const { return CBall(-re_, -im_); }
  CBall& operator+=(const CBall& o);
  CBall& operator-=(const CBall& o);
  CBall& operator*=(const CBall& o);
  CBall& operator/=(const CBall& o);
  friend CBall operator+(CBall a, const CBall& b) { return a += b; }
  friend CBall operator-(CBall a, const CBall& b) { return a -= b; }
  friend CBall operator*(CBall a, const CBall& b) { return a *= b; }
  friend CBall operator/(CBall a, const CBall& b) { return a /= b; }

  friend CBall exp(const CBall& a);

  /// |z|^2 and an upper bound on |z| as balls.
  Ball abs_sq() const { return re_ * re_ + im_ * im_; }
  Ball abs_upper() const;

  friend bool overlaps(const CBall& a, const CBall& b) {
    return overlaps(a.re_, b.re_) && overlaps(a.im_, b.im_);
  }

  std::string to_string() const;

 private:
  Ball re_;
  Ball im_;
};

}  // namespace mzv

#endif
