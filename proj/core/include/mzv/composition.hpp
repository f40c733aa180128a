#ifndef MZV_COMPOSITION_HPP
#define MZV_COMPOSITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// Argument list (s_1, ..., s_k) of a multiple zeta value.  Parts are >= 1;
/// admissible means s_1 >= 2, i.e. the value converges at x = 1.
struct Composition {
  std::vector<long> parts;

  long depth() const { return static_cast<long>(parts.size()); }
  long weight() const {
    long w = 0;
    for (long p : parts) w += p;
    return w;
  }
  bool admissible() const { return !parts.empty() && parts.front() >= 2; }

  auto operator<=>(const Composition&) const = default;

  std::string to_string() const;
  /// Parses "2,3"; parts must be positive.
  static Composition parse(const std::string& text);
};

struct SignedTerm {
  long s;     // exponent, >= 1
  int sigma;  // +1, or -1 for a barred argument
  auto operator<=>(const SignedTerm&) const = default;
};

/// Euler-sum argument list with signs and the evaluation point x in [0,1].
/// Inadmissible only when x = 1 and the leading argument is an unbarred 1.
struct SignedComposition {
  std::vector<SignedTerm> terms;
  Rat x = 1;

  long depth() const { return static_cast<long>(terms.size()); }
  long weight() const {
    long w = 0;
    for (auto& t : terms) w += t.s;
    return w;
  }
  bool admissible() const;

  std::string to_string() const;
  /// Bars are encoded as negative integers: "-2,1" means (2bar, 1).
  static SignedComposition parse(const std::string& text, const Rat& x = 1);
  static SignedComposition from_composition(const Composition& c, const Rat& x = 1);
};

/// Stuffle product u * v as a multiset of compositions (with multiplicity),
/// in the order the recursion generates them.
std::vector<Composition> stuffle(const Composition& u, const Composition& v);

std::vector<Composition> admissible_compositions_of_weight(long weight);
std::vector<Composition> admissible_compositions_of_weight_depth(long weight, long depth);

}  // namespace mzv

#endif
