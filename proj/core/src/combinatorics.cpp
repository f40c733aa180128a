#include "mzv/combinatorics.hpp"

#include <cassert>
#include <mutex>

namespace mzv {

Int stuffle_count_closed1(long m, long n) {
  Int total = 0;
  for (long k = 0; k <= m; ++k) total += binomial(m, k) * binomial(n + k, m);
  return total;
}

Int stuffle_count_closed2(long m, long n) {
  Int total = 0;
  for (long k = 0; k <= std::min(m, n); ++k)
    total += binomial(n, k) * binomial(m, k) * int_pow(2, k);
  return total;
}

Int stuffle_count_recursive(long m, long n) {
  std::vector<std::vector<Int>> f(m + 1, std::vector<Int>(n + 1, 1));
  for (long i = 1; i <= m; ++i)
    for (long j = 1; j <= n; ++j)
      f[i][j] = f[i - 1][j] + f[i][j - 1] + f[i - 1][j - 1];
  return f[m][n];
}

Int stuffle_count(long m, long n) {
  Int a = stuffle_count_closed1(m, n);
  Int b = stuffle_count_closed2(m, n);
  Int c = stuffle_count_recursive(m, n);
  if (a != b || a != c)
    throw MzvError(ErrorKind::OutOfDomain, "stuffle count routes disagree");
  return a;
}

std::vector<std::vector<long>> compositions_enum(long k, long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long parts_left, long rest) -> void {
    if (parts_left == 1) {
      cur.push_back(rest);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (long p = rest; p >= 0; --p) {
      cur.push_back(p);
      self(self, parts_left - 1, rest - p);
      cur.pop_back();
    }
  };
  if (k >= 1) rec(rec, k, n);
  return out;
}

std::vector<Partition> partitions_calpha(long k) {
  std::vector<Partition> out;
  std::vector<long> cur;
  auto finish = [&] {
    Partition p;
    p.parts = cur;
    // c_alpha from multiplicities
    Rat c = 1;
    size_t i = 0;
    while (i < cur.size()) {
      size_t j = i;
      while (j < cur.size() && cur[j] == cur[i]) ++j;
      long mult = static_cast<long>(j - i);
      Rat f(factorial(mult));
      c *= f * rat_pow(Rat(-cur[i]), mult);
      i = j;
    }
    p.c_alpha = c;
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, long rest, long max_part) -> void {
    if (rest == 0) {
      finish();
      return;
    }
    for (long p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k == 0 ? 1 : k);
  if (k == 0 && out.empty()) {
    Partition p;
    p.c_alpha = 1;
    out.push_back(p);
  }
  return out;
}

namespace {

// d_alpha(m): ordered tuples (d_1, ..., d_r) of positive integers with
// prod d_i^{alpha_i} = m.
Int divisor_count_alpha(long m, const std::vector<long>& alpha, size_t idx) {
  if (idx == alpha.size()) return m == 1 ? 1 : 0;
  Int total = 0;
  for (long d = 1; d <= m; ++d) {
    long q = m;
    bool divides = true;
    for (long e = 0; e < alpha[idx] && divides; ++e) {
      if (q % d != 0)
        divides = false;
      else
        q /= d;
    }
    if (divides) total += divisor_count_alpha(q, alpha, idx + 1);
  }
  return total;
}

}  // namespace

Int tau_factorizations(long m, long k) {
  if (m < 1 || k < 1)
    throw MzvError(ErrorKind::OutOfDomain, "tau needs m, k >= 1");
  Rat total = 0;
  for (const Partition& p : partitions_calpha(k)) {
    Int d = divisor_count_alpha(m, p.parts, 0);
    total += Rat(d) / p.c_alpha;
  }
  if (k % 2 != 0) total = -total;
  if (denominator(total) != 1)
    throw MzvError(ErrorKind::OutOfDomain, "tau formula gave a non-integer");
  return numerator(total);
}

Int tau_factorizations_enumerate(long m, long k) {
  if (m < 1 || k < 1)
    throw MzvError(ErrorKind::OutOfDomain, "tau needs m, k >= 1");
  // increasing tuples d_1 < d_2 < ... < d_k with product m
  auto rec = [](auto&& self, long rest, long remaining, long min_d) -> Int {
    if (remaining == 1) return rest >= min_d ? 1 : 0;
    Int total = 0;
    for (long d = min_d; d <= rest; ++d)
      if (rest % d == 0) total += self(self, rest / d, remaining - 1, d + 1);
    return total;
  };
  return rec(rec, m, k, 1);
}

Int stirling_first(long k, long j) {
  if (j < 0 || j > k) return 0;
  // s(k, j) = s(k-1, j-1) - (k-1) s(k-1, j)
  std::vector<Int> row(1, 1);
  for (long i = 1; i <= k; ++i) {
    std::vector<Int> next(i + 1, 0);
    for (long t = 0; t <= i; ++t) {
      Int v = 0;
      if (t >= 1) v += row[t - 1];
      if (t < i) v -= (i - 1) * row[t];
      next[t] = v;
    }
    row = std::move(next);
  }
  return row[j];
}

Int stirling_second(long k, long j) {
  if (j < 0 || j > k) return 0;
  std::vector<Int> row(1, 1);
  for (long i = 1; i <= k; ++i) {
    std::vector<Int> next(i + 1, 0);
    for (long t = 0; t <= i; ++t) {
      Int v = 0;
      if (t >= 1) v += row[t - 1];
      if (t < i) v += t * row[t];
      next[t] = v;
    }
    row = std::move(next);
  }
  return row[j];
}

Rat bernoulli(long j) {
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= j) {
    long m = static_cast<long>(cache.size());
    Rat acc = 0;
    for (long i = 0; i < m; ++i) acc += Rat(binomial(m + 1, i)) * cache[i];
    cache.push_back(-acc / Rat(m + 1));
  }
  return cache[j];
}

Rat nonpositive_limit(long n, long k, LimitOrder order) {
  if (n < 0 || k < 1)
    throw MzvError(ErrorKind::OutOfDomain, "need n >= 0, k >= 1");
  if (order == LimitOrder::s1_first) {
    Rat acc = 0;
    for (long j = 1; j <= n + 1; ++j) {
      Rat term = Rat(factorial(j) * stirling_second(n + 1, j)) / Rat(k + j);
      if ((k + j) % 2 != 0) term = -term;  // (-1)^{k+j}
      acc += term;
    }
    Rat front = Rat(1) / Rat(n + 1);
    if (n % 2 == 0) front = -front;  // (-1)^{n+1}
    return front * acc;
  }
  // sk_first
  Rat acc = 0;
  for (long j = 1; j <= k; ++j)
    acc += Rat(stirling_first(k, j)) * bernoulli(n + j) / Rat(n + j);
  Rat lead = 0;
  if (n == 0) lead = (k % 2 == 0) ? 1 : -1;
  return lead - acc / Rat(factorial(k - 1));
}

// ------------------------------------------------------- dimension tables

namespace {

// Dense truncated bivariate series over Q: degrees (weight, depth).
struct Series2 {
  long wmax, kmax;
  std::vector<Rat> c;  // (wmax+1) x (kmax+1)

  Series2(long w, long k) : wmax(w), kmax(k), c((w + 1) * (k + 1)) {}
  Rat& at(long w, long k) { return c[w * (kmax + 1) + k]; }
  const Rat& at(long w, long k) const { return c[w * (kmax + 1) + k]; }

  static Series2 one(long w, long k) {
    Series2 s(w, k);
    s.at(0, 0) = 1;
    return s;
  }

  Series2 mul(const Series2& o) const {
    Series2 r(wmax, kmax);
    for (long w1 = 0; w1 <= wmax; ++w1)
      for (long k1 = 0; k1 <= kmax; ++k1) {
        if (at(w1, k1) == 0) continue;
        for (long w2 = 0; w1 + w2 <= wmax; ++w2)
          for (long k2 = 0; k1 + k2 <= kmax; ++k2) {
            if (o.at(w2, k2) == 0) continue;
            r.at(w1 + w2, k1 + k2) += at(w1, k1) * o.at(w2, k2);
          }
      }
    return r;
  }

  Series2& add_scaled(const Series2& o, const Rat& s) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i] * s;
    return *this;
  }

  bool is_zero() const {
    for (const Rat& v : c)
      if (v != 0) return false;
    return true;
  }

  // 1/(1 - x^a y^b), truncated
  static Series2 geometric(long w, long k, long a, long b) {
    Series2 s(w, k);
    for (long m = 0; a * m <= w && b * m <= k; ++m) s.at(a * m, b * m) = 1;
    return s;
  }

  // monomial c x^a y^b
  static Series2 term(long w, long k, long a, long b, const Rat& coeff) {
    Series2 s(w, k);
    if (a <= w && b <= k) s.at(a, b) = coeff;
    return s;
  }
};

Series2 conjectured_product(DimTarget target, long W, long K) {
  Series2 rhs = Series2::one(W, K);
  switch (target) {
    case DimTarget::mzv_basis: {
      // 1 - x^3 y/(1-x^2) + x^12 y^2 (1-y^2)/((1-x^4)(1-x^6))
      Series2 t1 = Series2::term(W, K, 3, 1, -1).mul(Series2::geometric(W, K, 2, 0));
      Series2 num = Series2::term(W, K, 12, 2, 1);
      num.add_scaled(Series2::term(W, K, 12, 4, 1), -1);
      Series2 t2 = num.mul(Series2::geometric(W, K, 4, 0))
                       .mul(Series2::geometric(W, K, 6, 0));
      rhs.add_scaled(t1, 1);
      rhs.add_scaled(t2, 1);
      return rhs;
    }
    case DimTarget::mzv_via_euler: {
      // 1 - x^3 y/((1-x^2)(1-xy))
      Series2 t1 = Series2::term(W, K, 3, 1, -1)
                       .mul(Series2::geometric(W, K, 2, 0))
                       .mul(Series2::geometric(W, K, 1, 1));
      rhs.add_scaled(t1, 1);
      return rhs;
    }
    case DimTarget::euler_basis: {
      Series2 t1 = Series2::term(W, K, 3, 1, -1).mul(Series2::geometric(W, K, 2, 0));
      rhs.add_scaled(t1, 1);
      return rhs;
    }
    case DimTarget::clausen: {
      Series2 t1 = Series2::term(W, K, 2, 1, -1).mul(Series2::geometric(W, K, 1, 0));
      rhs.add_scaled(t1, 1);
      return rhs;
    }
  }
  throw MzvError(ErrorKind::OutOfDomain, "unknown dimension target");
}

}  // namespace

std::vector<std::vector<Rat>> conjectured_product_coeffs(DimTarget target,
                                                         long max_weight,
                                                         long max_depth) {
  Series2 rhs = conjectured_product(target, max_weight, max_depth);
  std::vector<std::vector<Rat>> out(max_weight + 1,
                                    std::vector<Rat>(max_depth + 1));
  for (long w = 0; w <= max_weight; ++w)
    for (long k = 0; k <= max_depth; ++k) out[w][k] = rhs.at(w, k);
  return out;
}

DimTarget dim_target_from_string(const std::string& name) {
  if (name == "mzv_basis") return DimTarget::mzv_basis;
  if (name == "mzv_via_euler") return DimTarget::mzv_via_euler;
  if (name == "euler_basis") return DimTarget::euler_basis;
  if (name == "clausen") return DimTarget::clausen;
  throw MzvError(ErrorKind::Parse, "unknown dimension target '" + name + "'");
}

std::string dim_target_name(DimTarget t) {
  switch (t) {
    case DimTarget::mzv_basis:
      return "mzv_basis";
    case DimTarget::mzv_via_euler:
      return "mzv_via_euler";
    case DimTarget::euler_basis:
      return "euler_basis";
    case DimTarget::clausen:
      return "clausen";
  }
  return "?";
}

std::vector<DimEntry> dimension_exponents(DimTarget target, long max_weight,
                                          long max_depth) {
  if (max_weight < 1 || max_depth < 1)
    throw MzvError(ErrorKind::OutOfDomain, "bounds must be >= 1");
  long W = max_weight, K = max_depth;
  Series2 rhs = conjectured_product(target, W, K);

  // L = -log(rhs) = -log(1 + u), u = rhs - 1
  Series2 u = rhs;
  u.at(0, 0) -= 1;
  Series2 L(W, K);
  Series2 upow = u;
  for (long j = 1; !upow.is_zero(); ++j) {
    Rat s = Rat(1) / Rat(j);
    if (j % 2 == 0) s = -s;
    L.add_scaled(upow, -s);  // -log(1+u) = -sum (-1)^{j+1} u^j / j
    upow = upow.mul(u);
  }

  // L(w,k) = sum_{d | gcd} E(w/d, k/d)/d  =>  peel multiples
  std::vector<std::vector<Rat>> E(W + 1, std::vector<Rat>(K + 1, Rat(0)));
  for (long w = 1; w <= W; ++w)
    for (long k = 1; k <= K; ++k) {
      Rat v = L.at(w, k);
      for (long d = 2; d <= std::min(w, k); ++d)
        if (w % d == 0 && k % d == 0) v -= E[w / d][k / d] / Rat(d);
      E[w][k] = v;
    }

  std::vector<DimEntry> out;
  for (long w = 1; w <= W; ++w)
    for (long k = 1; k <= K; ++k) {
      if (E[w][k] == 0) continue;
      if (denominator(E[w][k]) != 1)
        throw MzvError(ErrorKind::OutOfDomain,
                       "non-integer exponent in dimension table");
      out.push_back({w, k, static_cast<long>(numerator(E[w][k]))});
    }
  return out;
}

}  // namespace mzv
