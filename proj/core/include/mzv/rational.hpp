#ifndef MZV_RATIONAL_HPP
#define MZV_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace mzv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Error kinds shared across the library.  Every domain failure carries one
/// of these so callers (and the CLI) can map it to a diagnostic.
enum class ErrorKind {
  Divergent,
  OutOfDomain,
  NotConvertible,
  NotAdmissible,
  BadArity,
  Pole,
  Unsupported,
  Parse,
};

class MzvError : public std::runtime_error {
 public:
  MzvError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long j = 0; j < k; ++j) {
    r *= n - j;
    r /= j + 1;
  }
  return r;
}

inline Int factorial(long n) {
  Int r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw MzvError(ErrorKind::OutOfDomain, "0^negative");
    return 1 / rat_pow(base, -e);
  }
  Rat r = 1, b = base;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

/// Exact Gaussian rational p + q*i.  Coefficient ring of the word algebra;
/// the Broadhurst factorization needs i with i^2 = -1 available exactly.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}  // NOLINT: implicit from Rat
  GaussRat(long r) : re(r), im(0) {}        // NOLINT
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw MzvError(ErrorKind::OutOfDomain, "division by zero");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

GaussRat gauss_pow(const GaussRat& base, unsigned long e);

std::string rat_to_string(const Rat& r);
std::string gauss_to_string(const GaussRat& g);

/// Parses "p", "-p/q".  Throws ErrorKind::Parse on malformed input.
Rat parse_rational(const std::string& text);

}  // namespace mzv

#endif
