#include <doctest.h>

#include "mzv/combinatorics.hpp"
#include "mzv/composition.hpp"

using namespace mzv;

namespace {

// falling-factorial polynomial expansion, the oracle for signed Stirling
// numbers: x(x-1)...(x-k+1) = sum_j s(k,j) x^j
std::vector<Int> falling_factorial_coeffs(long k) {
  std::vector<Int> poly{1};  // constant 1
  for (long i = 0; i < k; ++i) {
    // multiply by (x - i)
    std::vector<Int> next(poly.size() + 1, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= Int(i) * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

TEST_CASE("stuffle counts") {
  CHECK(stuffle_count(1, 1) == 3);
  CHECK(stuffle_count(2, 1) == 5);
  CHECK(stuffle_count(4, 0) == 1);
  for (long m = 0; m <= 10; ++m)
    for (long n = 0; n <= 10; ++n) {
      Int f = stuffle_count(m, n);  // asserts all three routes agree
      CHECK(f == stuffle_count(n, m));
    }
  // |u * v| by direct expansion
  for (long m = 0; m <= 6; ++m)
    for (long n = 0; n <= 6; ++n) {
      Composition u, v;
      for (long i = 0; i < m; ++i) u.parts.push_back(1);
      for (long i = 0; i < n; ++i) v.parts.push_back(1);
      CHECK(Int(stuffle(u, v).size()) == stuffle_count(m, n));
    }
}

TEST_CASE("compositions enumeration") {
  auto c31 = compositions_enum(3, 1);
  REQUIRE(c31.size() == 3);
  CHECK(c31[0] == std::vector<long>{1, 0, 0});
  CHECK(c31[1] == std::vector<long>{0, 1, 0});
  CHECK(c31[2] == std::vector<long>{0, 0, 1});
  CHECK(compositions_enum(1, 5) == std::vector<std::vector<long>>{{5}});
  CHECK(Int(compositions_enum(5, 2).size()) == 15);
  for (long k = 1; k <= 5; ++k)
    for (long n = 0; n <= 6; ++n)
      CHECK(Int(compositions_enum(k, n).size()) == binomial(n + k - 1, k - 1));
}

TEST_CASE("partitions and c_alpha") {
  auto p0 = partitions_calpha(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].c_alpha == 1);
  CHECK(p0[0].parts.empty());

  auto p2 = partitions_calpha(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].parts == std::vector<long>{2});
  CHECK(p2[0].c_alpha == -2);
  CHECK(p2[1].parts == std::vector<long>{1, 1});
  CHECK(p2[1].c_alpha == 2);

  auto p3 = partitions_calpha(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].c_alpha == -3);
  CHECK(p3[1].c_alpha == 2);
  CHECK(p3[2].c_alpha == -6);

  for (const Partition& p : partitions_calpha(9)) {
    CHECK(p.size() == 9);
    CHECK(p.c_alpha != 0);
  }
}

TEST_CASE("factorization counts") {
  CHECK(tau_factorizations(12, 2) == 3);
  CHECK(tau_factorizations(30, 3) == 4);
  for (long m : {1, 2, 7, 24, 36, 60, 97}) CHECK(tau_factorizations(m, 1) == 1);
  for (long k = 1; k <= 4; ++k)
    for (long m = 1; m <= 300; ++m)
      CHECK(tau_factorizations(m, k) == tau_factorizations_enumerate(m, k));
}

TEST_CASE("stirling numbers") {
  CHECK(stirling_first(3, 2) == -3);
  CHECK(stirling_second(3, 2) == 3);
  for (long k = 0; k <= 9; ++k) {
    auto coeffs = falling_factorial_coeffs(k);
    for (long j = 0; j <= k; ++j) CHECK(stirling_first(k, j) == coeffs[j]);
  }
  // second kind: sum_j S(k,j) x(x-1)..(x-j+1) = x^k, checked at x = 17
  for (long k = 1; k <= 8; ++k) {
    Int x = 17, total = 0;
    for (long j = 0; j <= k; ++j) {
      Int ff = 1;
      for (long i = 0; i < j; ++i) ff *= x - i;
      total += stirling_second(k, j) * ff;
    }
    CHECK(total == int_pow(17, k));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(2) == Rat(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rat(-691, 2730));
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  for (long m = 1; m <= 20; ++m) {
    Rat acc = 0;
    for (long j = 0; j <= m; ++j) acc += Rat(binomial(m + 1, j)) * bernoulli(j);
    CHECK(acc == 0);
  }
}

TEST_CASE("nonpositive-integer limits") {
  CHECK(nonpositive_limit(0, 2, LimitOrder::s1_first) == Rat(1, 3));
  CHECK(nonpositive_limit(0, 2, LimitOrder::sk_first) == Rat(5, 12));
  CHECK(nonpositive_limit(0, 1, LimitOrder::sk_first) == Rat(-1, 2));
  CHECK(nonpositive_limit(0, 1, LimitOrder::s1_first) == Rat(-1, 2));
  for (long n = 1; n <= 6; ++n) {
    Rat classical = -bernoulli(n + 1) / Rat(n + 1);
    CHECK(nonpositive_limit(n, 1, LimitOrder::s1_first) == classical);
    CHECK(nonpositive_limit(n, 1, LimitOrder::sk_first) == classical);
  }
  // the two orders genuinely differ for k >= 2
  CHECK(nonpositive_limit(0, 2, LimitOrder::s1_first) !=
        nonpositive_limit(0, 2, LimitOrder::sk_first));
}

TEST_CASE("dimension exponent tables") {
  auto mzv = dimension_exponents(DimTarget::mzv_basis, 12, 4);
  auto euler = dimension_exponents(DimTarget::euler_basis, 10, 4);
  auto clausen = dimension_exponents(DimTarget::clausen, 8, 4);
  auto via = dimension_exponents(DimTarget::mzv_via_euler, 10, 4);

  auto value_of = [](const std::vector<DimEntry>& t, long w, long k) -> long {
    for (const DimEntry& e : t)
      if (e.weight == w && e.depth == k) return e.value;
    return 0;
  };
  CHECK(value_of(mzv, 3, 1) == 1);
  CHECK(value_of(mzv, 5, 1) == 1);
  CHECK(value_of(mzv, 7, 1) == 1);
  CHECK(value_of(mzv, 12, 2) == 1);
  CHECK(value_of(euler, 3, 1) == 1);
  CHECK(value_of(clausen, 2, 1) == 1);
  CHECK(value_of(via, 3, 1) == 1);
  CHECK(value_of(via, 4, 2) == 1);
  // nothing below weight 2
  for (const DimEntry& e : mzv) CHECK(e.weight >= 3);
  for (const DimEntry& e : clausen) CHECK(e.weight >= 2);
}

