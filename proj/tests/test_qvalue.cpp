#include <doctest.h>

#include "mzv/ncpoly.hpp"
#include "mzv/qvalue.hpp"

using namespace mzv;

TEST_CASE("single-form q integrals") {
  // t^0: integral of d_q t over [0,1] telescopes to 1
  CHECK(q_word_value_exact(Word::parse("a"), 1, Rat(1, 2)) == 1);
  CHECK(q_word_value_exact(Word::parse("a"), Rat(2, 3), Rat(1, 2)) == Rat(2, 3));
  // t^1: x^2/(1+q)
  for (const Rat& q : {Rat(1, 2), Rat(7, 10), Rat(99, 100)})
    CHECK(q_word_value_exact(Word::parse("b"), 1, q) == 1 / (1 + q));
  CHECK(q_word_value_exact(Word::parse("b"), Rat(1, 3), Rat(1, 2)) ==
        Rat(1, 9) * Rat(2, 3));
  CHECK_THROWS_AS(q_word_value_exact(Word::parse("a"), 1, Rat(3, 2)), MzvError);
}

TEST_CASE("worked ab example") {
  Rat q(1, 2);
  CHECK(q_word_value_exact(Word::parse("ab"), 1, q) == Rat(8, 21));
  // (1-q)^2 / ((1-q^3)(1-q^2)):
  Rat direct = rat_pow(1 - q, 2) / ((1 - rat_pow(q, 3)) * (1 - rat_pow(q, 2)));
  CHECK(direct == Rat(8, 21));

  // the two terms of a qsh b
  Word b_eta_a{{Letter{'b', 0}, Letter{'a', 1}}};
  CHECK(q_word_value_exact(b_eta_a, 1, q) == Rat(2, 7));
  CHECK(q_word_value_exact(qshuffle(Word::parse("a"), Word::parse("b")), 1, q) ==
        Rat(2, 3));
}

TEST_CASE("q-shuffle factorizes the q-integral") {
  // all monomial-form pairs with |u| + |v| <= 4 over t^0, t^1, t^2
  const std::vector<char> alphabet{'a', 'b', 'c'};
  std::vector<std::vector<Word>> by_len(4);
  by_len[0].push_back(Word{});
  for (size_t l = 1; l < by_len.size(); ++l)
    for (const Word& w : by_len[l - 1])
      for (char c : alphabet) {
        Word e = w;
        e.letters.push_back(Letter{c, 0});
        by_len[l].push_back(e);
      }
  for (auto [x, q] : std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(1, 2)},
                                                      {Rat(4, 5), Rat(7, 10)}})
    for (size_t lu = 1; lu <= 3; ++lu)
      for (size_t lv = 1; lu + lv <= 4; ++lv)
        for (const Word& u : by_len[lu])
          for (const Word& v : by_len[lv])
            CHECK(q_word_value_exact(qshuffle(u, v), x, q) ==
                  q_word_value_exact(u, x, q) * q_word_value_exact(v, x, q));
}

TEST_CASE("semantic commutativity and associativity") {
  // formal expansions differ, exact q-values agree
  for (auto [x, q] : std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(1, 2)},
                                                      {Rat(4, 5), Rat(7, 10)}})
    for (const char* ut : {"a", "b", "ab"})
      for (const char* vt : {"c", "ba"})
        for (const char* wt : {"b", "ca"}) {
          Word u = Word::parse(ut), v = Word::parse(vt), w = Word::parse(wt);
          Rat product = q_word_value_exact(u, x, q) * q_word_value_exact(v, x, q) *
                        q_word_value_exact(w, x, q);
          CHECK(q_word_value_exact(qshuffle(u, v), x, q) ==
                q_word_value_exact(qshuffle(v, u), x, q));
          NcPoly left = qshuffle(qshuffle(u, v), NcPoly::monomial(w));
          NcPoly right = qshuffle(NcPoly::monomial(u), qshuffle(v, w));
          CHECK(q_word_value_exact(left, x, q) == product);
          CHECK(q_word_value_exact(right, x, q) == product);
        }
}

TEST_CASE("equivalent expansions of w1 qsh w2w3") {
  Letter l1{'a', 0}, l2{'b', 0}, l3{'c', 0};
  NcPoly first;
  first.add_term(Word{{l1, l2, l3}}, GaussRat(1));
  first.add_term(Word{{l2, Letter{'a', 1}, l3}}, GaussRat(1));
  first.add_term(Word{{l2, l3, Letter{'a', 2}}}, GaussRat(1));
  NcPoly second;
  second.add_term(Word{{l1, l2, l3}}, GaussRat(1));
  second.add_term(Word{{l2, Letter{'a', 1}, Letter{'c', 1}}}, GaussRat(1));
  second.add_term(Word{{l2, l3, Letter{'a', 1}}}, GaussRat(1));

  CHECK(qshuffle(Word::parse("a"), Word::parse("bc")) == first);
  CHECK(!(first == second));  // different words, same value
  for (auto [x, q] : std::vector<std::pair<Rat, Rat>>{{Rat(1), Rat(1, 2)},
                                                      {Rat(4, 5), Rat(7, 10)},
                                                      {Rat(1, 3), Rat(9, 10)}})
    CHECK(q_word_value_exact(first, x, q) == q_word_value_exact(second, x, q));
}

TEST_CASE("classical limit") {
  CHECK(classical_word_value(Word::parse("a"), 1) == 1);
  CHECK(classical_word_value(Word::parse("b"), 1) == Rat(1, 2));
  CHECK(classical_word_value(Word::parse("ab"), 1) == Rat(1, 6));

  for (const char* text : {"a", "b", "ab", "abc"}) {
    Word w = Word::parse(text);
    Rat classical = classical_word_value(w, 1);
    std::vector<Rat> qs;
    for (long j = 2; j <= 12; ++j) qs.push_back(1 - Rat(1, int_pow(2, j)));
    std::vector<Rat> values = q_limit_check(w, 1, qs);
    Rat prev_err;
    for (size_t i = 0; i < values.size(); ++i) {
      Rat err = abs(values[i] - classical);
      if (i > 0) CHECK(err <= prev_err * Rat(3, 4));  // O(1-q) halving
      prev_err = err;
    }
    CHECK(prev_err <= Rat(4, int_pow(2, 12)));
  }
}

TEST_CASE("form construction and errors") {
  CHECK(qform_of_letter(Letter{'c', 2}).exponent == 2);
  CHECK(qform_of_letter(Letter{'c', 2}).shift == 2);
  NcPoly imag = NcPoly::monomial(Word::parse("a"), GaussRat::i());
  CHECK_THROWS_AS(q_word_value_exact(imag, 1, Rat(1, 2)), MzvError);
}
