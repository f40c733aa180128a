#ifndef MZV_SYMBOLIC_HPP
#define MZV_SYMBOLIC_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "mzv/ball.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// A zeta symbol: zeta(arg) for a concrete integer arg >= 2, or the formal
/// zeta(j*s) used by the period-one reduction before s is instantiated.
struct ZetaSym {
  long arg;     // concrete argument, or the multiplier j of the formal s
  bool formal;  // true: stands for zeta(arg * s)

  auto operator<=>(const ZetaSym&) const = default;
};

/// Polynomial over Q in zeta symbols.  Symbols are atomic: zeta(even) is
/// never rewritten into pi powers inside the ring; substitution happens
/// only on evaluation or via an explicit conversion.
class ZetaPoly {
 public:
  using Monomial = std::map<ZetaSym, long>;  // symbol -> exponent >= 1
  using Terms = std::map<Monomial, Rat>;

  ZetaPoly() = default;
  static ZetaPoly constant(const Rat& c);
  static ZetaPoly one() { return constant(1); }
  /// zeta(k), k >= 2.
  static ZetaPoly zeta(long k);
  /// Formal zeta(j*s), j >= 1.
  static ZetaPoly zeta_formal(long j);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rat coeff(const Monomial& m) const;

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  ZetaPoly scaled(const Rat& c) const;
  ZetaPoly pow(long e) const;
  bool operator==(const ZetaPoly& o) const { return terms_ == o.terms_; }

  bool has_formal() const;
  /// Replaces every formal zeta(j*s) by zeta(j * s_value).
  ZetaPoly instantiate(long s_value) const;

  /// Total zeta-weight of every monomial when they all agree (constant
  /// polynomials have weight 0); nullopt for mixed weights or formal syms.
  std::optional<long> homogeneous_weight() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  Terms terms_;
};

/// coefficient * pi^power, exact.
struct ExactPiMultiple {
  Rat coeff;
  long power = 0;

  bool is_zero() const { return coeff == 0; }
  bool operator==(const ExactPiMultiple& o) const {
    return (coeff == 0 && o.coeff == 0) ||
           (coeff == o.coeff && power == o.power);
  }
  std::string to_string() const;
};

/// zeta(2n) as an exact rational multiple of pi^{2n} (Bernoulli route).
ExactPiMultiple zeta_even_exact(long n);

/// Substitutes zeta(2j) -> exact pi form in a polynomial whose symbols are
/// all concrete even integers.  Requires homogeneous weight; the result is
/// a single pi power.
ExactPiMultiple pi_form_of_even_poly(const ZetaPoly& p);

/// Coefficient of x^{m+1} y^{n+1} in
///   1 - exp{ sum_{k>=2} (x^k + y^k - (x+y)^k) zeta(k)/k },
/// which equals zeta(m+2, {1}^n).
ZetaPoly drin_coefficient(long m, long n);

/// zeta(m,1) = (m zeta(m+1) - sum_{j=1}^{m-2} zeta(m-j) zeta(j+1)) / 2, m >= 2.
ZetaPoly euler_reduction(long m);

/// zeta(s,1,1) for s >= 3.
ZetaPoly markett_reduction(long s);

/// zeta({s}^k) as a polynomial in the formal symbols zeta(js):
/// explicit partition formula with c_alpha.
ZetaPoly period1_reduce(long k);
/// Same value through the Newton-recurrence expansion.
ZetaPoly period1_reduce_newton(long k);

ExactPiMultiple closed_z31(long n);      // zeta({3,1}^n)
ExactPiMultiple closed_z4block(long n);  // zeta({4}^n)
ExactPiMultiple closed_z2block(long m);  // zeta({2}^m)
ZetaPoly closed_z313(long n);            // zeta(3, {1,3}^n)
ZetaPoly closed_z213(long n);            // zeta(2, {1,3}^n)

Ball evaluate_symbolic(const ZetaPoly& p, Prec prec);
Ball evaluate_pi_multiple(const ExactPiMultiple& p, Prec prec);

}  // namespace mzv

#endif
