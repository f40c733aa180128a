#include <doctest.h>

#include <random>

#include "mzv/ball.hpp"

using namespace mzv;

TEST_CASE("ball basics") {
  Prec p = 128;
  Ball one = Ball::from_long(1, p);
  CHECK(one.is_exact());
  Ball third = Ball::from_rat(Rat(1, 3), p);
  CHECK(!third.is_exact());  // not dyadic, carries a rounding radius
  CHECK(third.rad_exponent() < -120);

  Ball sum = third + third + third;
  CHECK(contains(sum, one));

  Ball q = Ball::from_rat(Rat(1, 4), p);
  CHECK(q.is_exact());  // dyadic
  CHECK((q * Ball::from_long(4, p)).is_exact());
}

TEST_CASE("enclosure survives arithmetic") {
  // recomputing at doubled precision gives a ball inside the coarse one
  for (Prec p : {64, 128}) {
    Ball coarse = Ball::pi(p) * Ball::euler_gamma(p) + Ball::log_two(p);
    Ball fine = Ball::pi(4 * p) * Ball::euler_gamma(4 * p) + Ball::log_two(4 * p);
    CHECK(contains(coarse, fine));
    CHECK(overlaps(coarse, fine));
  }
}

TEST_CASE("division and sqrt enclosures") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rat a(num(rng), num(rng));
    Rat b(num(rng), num(rng));
    Ball x = Ball::from_rat(a, 96);
    Ball y = Ball::from_rat(b, 96);
    Ball z = x / y * y;
    CHECK(contains(z, Ball::from_rat(a, 200)));
    Ball s = sqrt(x) * sqrt(x);
    CHECK(overlaps(s, Ball::from_rat(a, 200)));
  }
}

TEST_CASE("elementary functions") {
  Prec p = 150;
  Ball x = Ball::from_rat(Rat(3, 10), p);
  CHECK(overlaps(exp(log(Ball::from_long(7, p))), Ball::from_long(7, p)));
  Ball s = sin(x) * sin(x) + cos(x) * cos(x);
  CHECK(contains(s, Ball::from_long(1, 300)));
  Ball h = cosh(x) * cosh(x) - sinh(x) * sinh(x);
  CHECK(overlaps(h, Ball::from_long(1, 300)));
}

TEST_CASE("string and hex round trips") {
  Ball v = Ball::pi(100) / Ball::from_long(3, 100);
  Ball back = Ball::from_hex(v.mid_hex(), v.rad_hex(), 100);
  CHECK(contains(back, v));
  CHECK(contains(v, back));
  CHECK(v.to_string() == back.to_string());

  Ball z = Ball::zero(64);
  CHECK(z.to_string() == "0 \xc2\xb1 0");
}

TEST_CASE("complex balls") {
  Prec p = 128;
  CBall i = CBall::i(p);
  CBall m1 = i * i;
  CHECK(contains(m1.real(), Ball::from_long(-1, 256)));
  CHECK(m1.imag().mid_is_zero());

  CBall z = CBall::from_rats(Rat(1, 3), Rat(-2, 7), p);
  CBall w = z / z;
  CHECK(overlaps(w.real(), Ball::from_long(1, 256)));
  CHECK(overlaps(w.imag(), Ball::zero(256)));

  // exp(i pi) = -1
  CBall e = exp(CBall(Ball::zero(p), Ball::pi(p)));
  CHECK(overlaps(e.real(), Ball::from_long(-1, 256)));
  CHECK(overlaps(e.imag(), Ball::zero(256)));
}
