#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mzv/ncpoly.hpp"
#include "mzv/combinatorics.hpp"

using namespace mzv;

namespace {

// Oracle: shuffle by direct enumeration of the positions u's letters occupy,
// independent of the recursive implementation.
NcPoly shuffle_enumerated(const Word& u, const Word& v) {
  long m = u.size(), n = v.size();
  NcPoly out;
  std::vector<bool> pick(m + n, false);
  std::fill(pick.begin(), pick.begin() + m, true);
  std::sort(pick.begin(), pick.end());
  do {
    Word w;
    long iu = 0, iv = 0;
    for (long pos = 0; pos < m + n; ++pos)
      w.letters.push_back(pick[pos] ? u.letters[iu++] : v.letters[iv++]);
    out.add_term(w, GaussRat(1));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<Word> words_up_to(long max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> prev{Word{}};
  for (long l = 1; l <= max_len; ++l) {
    std::vector<Word> next;
    for (const Word& w : prev)
      for (char c : {'a', 'b'}) {
        Word e = w;
        e.letters.push_back(Letter{c, 0});
        next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937& rng, long len) {
  Word w;
  std::uniform_int_distribution<int> coin(0, 1);
  for (long i = 0; i < len; ++i)
    w.letters.push_back(Letter{coin(rng) ? 'a' : 'b', 0});
  return w;
}

}  // namespace

TEST_CASE("shuffle examples") {
  // enumeration oracle first: all 6 interleavings of ab with ab
  NcPoly oracle = shuffle_enumerated(Word::parse("ab"), Word::parse("ab"));
  CHECK(oracle.to_string() == "4*aabb + 2*abab");
  CHECK(shuffle(Word::parse("ab"), Word::parse("ab")) == oracle);

  CHECK(shuffle(Word{}, Word::parse("abba")) == NcPoly::monomial(Word::parse("abba")));
  CHECK(shuffle(Word::parse("a"), Word::parse("b")).to_string() == "ab + ba");
  CHECK(shuffle(Word::parse("a"), Word::parse("b")).mass() == GaussRat(2));
}

TEST_CASE("shuffle agrees with enumeration, left and right recursions") {
  auto words = words_up_to(3);
  for (const Word& u : words)
    for (const Word& v : words) {
      NcPoly ref = shuffle_enumerated(u, v);
      CHECK(shuffle(u, v) == ref);
      CHECK(shuffle_right(u, v) == ref);
    }
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Word u = random_word(rng, 4 + i % 2);
    Word v = random_word(rng, 5);
    NcPoly ref = shuffle_enumerated(u, v);
    CHECK(shuffle(u, v) == ref);
    CHECK(shuffle_right(u, v) == ref);
  }
}

TEST_CASE("shuffle mass is binomial and matches the lattice-point count") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    long m = 1 + i % 5, n = 1 + (i / 5) % 5;
    Word u = random_word(rng, m), v = random_word(rng, n);
    CHECK(shuffle(u, v).mass() == GaussRat(Rat(binomial(m + n, m))));
    // |{a in Z_{>=0}^m : sum <= n}| = C(m+n, n)
    long count = 0;
    for (const auto& c : compositions_enum(m + 1, n)) {
      (void)c;
      ++count;  // tuples (a_1..a_m, slack) with total n
    }
    CHECK(Int(count) == binomial(m + n, n));
  }
}

TEST_CASE("shuffle is commutative and associative") {
  auto words = words_up_to(3);
  for (const Word& u : words)
    for (const Word& v : words) CHECK(shuffle(u, v) == shuffle(v, u));
  std::mt19937 rng(23);
  for (int i = 0; i < 12; ++i) {
    Word u = random_word(rng, 2 + i % 3);
    Word v = random_word(rng, 3);
    Word w = random_word(rng, 2 + i % 4);
    NcPoly uv = shuffle(u, v);
    NcPoly vw = shuffle(v, w);
    CHECK(shuffle(uv, NcPoly::monomial(w)) == shuffle(NcPoly::monomial(u), vw));
    CHECK(shuffle(u, v) == shuffle(v, u));
  }
}

TEST_CASE("word/composition conversion") {
  CHECK(word_from_composition(Composition::parse("3,1")).to_string() == "aabb");
  CHECK(composition_from_word(Word::parse("ab")).to_string() == "2");
  CHECK_THROWS_AS(composition_from_word(Word::parse("aba")), MzvError);
  // roundtrip both ways, leading 1s allowed
  for (long w = 1; w <= 7; ++w)
    for (const auto& c : compositions_enum(3, w)) {
      Composition comp{{c[0] + 1, c[1] + 1, c[2] + 1}};
      CHECK(composition_from_word(word_from_composition(comp)) == comp);
    }
}

TEST_CASE("duality") {
  CHECK(dual_composition(Composition::parse("3")).to_string() == "2,1");
  CHECK(dual_composition(Composition::parse("2")).to_string() == "2");
  CHECK_THROWS_AS(dual_composition(Composition::parse("1,2")), MzvError);
  for (long w = 2; w <= 9; ++w)
    for (const Composition& s : admissible_compositions_of_weight(w)) {
      Composition d = dual_composition(s);
      CHECK(d.weight() == s.weight());
      CHECK(dual_composition(d) == s);
    }
  // dual of (s1+2, {1}^{r1}) is (r1+2, {1}^{s1})
  Composition s{{5, 1, 1}};  // s1 = 3, r1 = 2
  CHECK(dual_composition(s).to_string() == "4,1,1,1");
}

TEST_CASE("t word sums") {
  CHECK(t_word_sum(2, 1).to_string() == "aabb");
  CHECK(t_word_sum(3, 0).to_string() == "ababab");
  CHECK(t_word_sum(1, 1).is_zero());
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; 2 * n <= m; ++n) {
      NcPoly t = t_word_sum(m, n);
      Int expected = factorial(m) / (factorial(2 * n) * factorial(m - 2 * n));
      CHECK(Int(t.term_count()) == expected);
      for (const auto& [w, c] : t.terms()) CHECK(c == GaussRat(1));
    }
}

TEST_CASE("phi insertion") {
  CHECK(phi_insertion({0, 0, 0}).to_string() == "aabb");
  CHECK(phi_insertion({1, 0, 0}).to_string() == "abaabb");
  CHECK(phi_insertion({3}).to_string() == "ababab");
  CHECK_THROWS_AS(phi_insertion({1, 2}), MzvError);

  // bijective onto S_{m,n}: image equals the support of t_word_sum(m,n)
  for (long m = 0; m <= 7; ++m)
    for (long n = 0; 2 * n <= m; ++n) {
      std::set<Word, WordLess> image;
      for (const auto& vec : compositions_enum(2 * n + 1, m - 2 * n))
        CHECK(image.insert(phi_insertion(vec)).second);  // injective
      std::set<Word, WordLess> support;
      NcPoly t = t_word_sum(m, n);
      for (const auto& [w, c] : t.terms()) support.insert(w);
      CHECK(image == support);
    }

  // argument insertion: phi((1,0,2)) composes to zeta(2,3,1,2,2)
  CHECK(composition_from_word(phi_insertion({1, 0, 2})).to_string() == "2,3,1,2,2");
}

TEST_CASE("eta shift") {
  NcPoly p = qshuffle(Word::parse("a"), Word::parse("b"));
  CHECK(eta_shift(p, 0) == p);
  CHECK(eta_shift(eta_shift(p, 1), 2) == eta_shift(p, 3));
  CHECK(eta_shift(Word::parse("ab"), 1).to_string() == "a[1]b[1]");
}

TEST_CASE("qshuffle") {
  CHECK(qshuffle(Word::parse("a"), Word::parse("b")).to_string() == "ab + ba[1]");
  CHECK(qshuffle(Word::parse("a"), Word::parse("bc")).to_string() ==
        "abc + ba[1]c + bca[2]");
  CHECK(qshuffle(Word{}, Word::parse("ab")) == NcPoly::monomial(Word::parse("ab")));

  // term counts match the shuffle binomial
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    Word u = random_word(rng, 1 + i % 3);
    Word v = random_word(rng, 1 + (i / 3) % 3);
    CHECK(qshuffle(u, v).mass() ==
          GaussRat(Rat(binomial(u.size() + v.size(), u.size()))));
  }

  // with all shifts collapsed to zero the q-shuffle is the plain shuffle
  for (int i = 0; i < 20; ++i) {
    Word u = random_word(rng, 1 + i % 4);
    Word v = random_word(rng, 1 + (i / 4) % 3);
    NcPoly q = qshuffle(u, v);
    NcPoly zeroed;
    for (const auto& [w, c] : q.terms()) {
      Word flat = w;
      for (Letter& l : flat.letters) l.shift = 0;
      zeroed.add_term(flat, c);
    }
    CHECK(zeroed == shuffle(u, v));
  }
}

TEST_CASE("broadhurst word series") {
  auto a = broadhurst_a_words(6);
  auto m = broadhurst_m_words(6);
  CHECK(a[0] == NcPoly::one());
  CHECK(a[2].to_string() == "ab");
  CHECK(a[5].to_string() == "ababa");
  CHECK(m[3].to_string() == "aab");
  CHECK(m[4].to_string() == "aabb");
  CHECK(m[6].to_string() == "aabbaa");
}

TEST_CASE("word parsing and printing") {
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("ba[1]").to_string() == "ba[1]");
  CHECK(Word::parse("a[2]b").letters[0].shift == 2);
  CHECK_THROWS_AS(Word::parse("a[x]"), MzvError);
  CHECK_THROWS_AS(Word::parse("A"), MzvError);
  CHECK(NcPoly::zero().to_string() == "0");
}

TEST_CASE("stuffle multiset") {
  auto r = stuffle(Composition::parse("2"), Composition::parse("3"));
  REQUIRE(r.size() == 3);
  CHECK(r[0].to_string() == "2,3");
  CHECK(r[1].to_string() == "3,2");
  CHECK(r[2].to_string() == "5");

  // (s,t)*(u) with s=2, t=3, u=5
  auto st_u = stuffle(Composition::parse("2,3"), Composition::parse("5"));
  std::multiset<std::string> got;
  for (const auto& c : st_u) got.insert(c.to_string());
  std::multiset<std::string> want{"2,3,5", "2,8", "2,5,3", "7,3", "5,2,3"};
  CHECK(got == want);

  CHECK(stuffle(Composition{}, Composition::parse("4,1")).size() == 1);

  // multiset commutativity and counts
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 4; ++n) {
      Composition u, v;
      for (long i = 0; i < m; ++i) u.parts.push_back(i + 2);
      for (long i = 0; i < n; ++i) v.parts.push_back(2 * i + 3);
      auto uv = stuffle(u, v);
      auto vu = stuffle(v, u);
      CHECK(Int(uv.size()) == stuffle_count(m, n));
      std::multiset<std::string> a, b;
      for (const auto& c : uv) a.insert(c.to_string());
      for (const auto& c : vu) b.insert(c.to_string());
      CHECK(a == b);
    }
}
