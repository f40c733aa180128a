#ifndef MZV_COMBINATORICS_HPP
#define MZV_COMBINATORICS_HPP

#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// Number f(m,n) of lists in the stuffle product of lists of lengths m, n.
/// Three routes: the two binomial closed forms and the recursion from
/// F(x,y) = (1 - x - y - xy)^{-1}.
Int stuffle_count_closed1(long m, long n);  // sum_k C(m,k) C(n+k,m)
Int stuffle_count_closed2(long m, long n);  // sum_k C(n,k) C(m,k) 2^k
Int stuffle_count_recursive(long m, long n);
/// All three routes, which must agree (asserted).
Int stuffle_count(long m, long n);

/// Ordered k-tuples of nonnegative integers summing to n, first part
/// largest first: C_3(1) = [(1,0,0),(0,1,0),(0,0,1)].
std::vector<std::vector<long>> compositions_enum(long k, long n);

/// Integer partition with its c_alpha = prod_j m_j! (-j)^{m_j}, where m_j
/// counts parts of size j.
struct Partition {
  std::vector<long> parts;  // weakly decreasing
  Rat c_alpha;
  long size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }
};

std::vector<Partition> partitions_calpha(long k);

/// Number of unordered factorizations of m into k distinct factors (the
/// factor 1 is allowed), via the partition/divisor-function formula
///   tau_k(m) = (-1)^k sum_{|alpha| = k} c_alpha^{-1} d_alpha(m).
Int tau_factorizations(long m, long k);
/// Same count by direct enumeration of increasing factor tuples.
Int tau_factorizations_enumerate(long m, long k);

/// Signed Stirling numbers of the first kind: x(x-1)...(x-k+1) = sum s(k,j) x^j.
Int stirling_first(long k, long j);
/// Stirling numbers of the second kind.
Int stirling_second(long k, long j);
/// Bernoulli numbers with B_1 = -1/2.
Rat bernoulli(long j);

enum class LimitOrder { s1_first, sk_first };

/// Value of the depth-k zeta limit at (-n, 0, ..., 0); the two iteration
/// orders give different answers.
Rat nonpositive_limit(long n, long k, LimitOrder order);

enum class DimTarget { mzv_basis, mzv_via_euler, euler_basis, clausen };

struct DimEntry {
  long weight;
  long depth;
  long value;
};

DimTarget dim_target_from_string(const std::string& name);
std::string dim_target_name(DimTarget t);

/// Exponents E(n,k) with prod (1 - x^n y^k)^{E(n,k)} equal to the
/// conjectured generating product for the target, extracted from the
/// logarithmic coefficient recursion and truncated to the given bounds.
/// Entries are reported as-is, including any that come out <= 0.
std::vector<DimEntry> dimension_exponents(DimTarget target, long max_weight,
                                          long max_depth);

/// Truncated coefficients [weight][depth] of the conjectured right-hand
/// side product itself.
std::vector<std::vector<Rat>> conjectured_product_coeffs(DimTarget target,
                                                         long max_weight,
                                                         long max_depth);

}  // namespace mzv

#endif
