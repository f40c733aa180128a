#include <doctest.h>

#include "mzv/checks.hpp"
#include "mzv/euler_sum.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/special_functions.hpp"
#include "mzv/symbolic.hpp"
#include "mzv/zeta_values.hpp"

using namespace mzv;

namespace {

Ball rat_ball(const Rat& r, Prec p) { return Ball::from_rat(r, p); }

// enclosure of a decimal literal (published constant digits) with the
// quoted number of correct digits
Ball literal(const char* digits10, long correct, Prec p) {
  Ball b(p);
  mpfr_set_str(b.mid(), digits10, 10, MPFR_RNDN);
  Ball pad = Ball::from_rat(rat_pow(Rat(1, 10), correct), 64);
  b.add_error(pad);
  return b;
}

}  // namespace

TEST_CASE("riemann zeta values") {
  Prec p = digits_to_bits(40);
  // Apery's constant, 50 published digits
  Ball z3_ref = literal("1.2020569031595942853997381615114499907649862923405", 49, p);
  CHECK(overlaps(zeta_riemann(3, p), z3_ref));
  CHECK(overlaps(zeta_euler_maclaurin(3, p), z3_ref));

  // even route is the exact pi-power; cross-check against Euler-Maclaurin
  for (long s : {2, 4, 8}) {
    Ball exact = zeta_riemann(s, p);
    Ball em = zeta_euler_maclaurin(s, p);
    CHECK(overlaps(exact, em));
    CHECK(exact.rad_exponent() < -(static_cast<long>(p)) + 24);
  }
  Ball z2 = zeta_riemann(2, p);
  Ball pi26 = Ball::pi(p) * Ball::pi(p) / Ball::from_long(6, p);
  CHECK(overlaps(z2, pi26));

  // direct-series route for large s
  Ball z40 = zeta_riemann(41, p);
  Ball z40_ref = Ball::from_long(1, p);
  CHECK(Ball::mid_distance(z40, z40_ref).upper().mid_double() < 1e-12);

  CHECK_THROWS_AS(zeta_riemann(1, p), MzvError);

  // doubled precision stays inside the coarse enclosure
  for (long s : {3, 5, 7}) {
    Ball coarse = zeta_riemann(s, digits_to_bits(20));
    Ball fine = zeta_riemann(s, digits_to_bits(45));
    CHECK(contains(coarse, fine));
  }
}

TEST_CASE("convergence region") {
  CHECK(convergence_region({2, 1}));
  CHECK(!convergence_region({1, 2}));
  CHECK(convergence_region({1.5, 1.6}));
  CHECK(convergence_region({}));
  CHECK(!convergence_region({1.0}));
}

TEST_CASE("euler sums") {
  Prec p8 = digits_to_bits(8);
  // alternating harmonic series
  Ball zbar = euler_sum_eval(SignedComposition::parse("-1"), p8);
  CHECK(overlaps(zbar, -Ball::log_two(128)));

  // x = 0 kills every term; empty list is 1
  Ball zero = euler_sum_eval(SignedComposition::parse("2,1", Rat(0)), 128);
  CHECK(zero.mid_is_zero());
  CHECK(euler_sum_eval(SignedComposition{{}, Rat(1, 2)}, 128).to_string() ==
        Ball::from_long(1, 152).to_string());

  // zeta_{1/2}(1) = log 2
  Ball log_half = euler_sum_eval(SignedComposition::parse("1", Rat(1, 2)),
                                 digits_to_bits(35));
  CHECK(overlaps(log_half, Ball::log_two(256)));

  CHECK_THROWS_AS(euler_sum_eval(SignedComposition::parse("1,1", Rat(1)), 128),
                  MzvError);
}

TEST_CASE("hoelder mzv evaluation") {
  Prec p = digits_to_bits(40);
  Ball z21 = mzv_eval(Composition::parse("2,1"), p);
  CHECK(overlaps(z21, zeta_riemann(3, p)));
  CHECK(Ball::mid_distance(z21, zeta_riemann(3, p)).upper().mid_double() < 1e-30);

  Ball z31 = mzv_eval(Composition::parse("3,1"), p);
  Ball pi4_360 = evaluate_pi_multiple(ExactPiMultiple{Rat(1, 360), 4}, p);
  CHECK(overlaps(z31, pi4_360));

  Ball z222 = mzv_eval(Composition::parse("2,2,2"), p);
  Ball pi6 = evaluate_pi_multiple(ExactPiMultiple{Rat(1, 5040), 6}, p);
  CHECK(overlaps(z222, pi6));

  CHECK_THROWS_AS(mzv_eval(Composition::parse("1,2"), p), MzvError);

  // agreement with the direct truncated nested sum at modest precision,
  // every admissible composition of weight <= 6
  for (long w = 2; w <= 6; ++w)
    for (const Composition& s : admissible_compositions_of_weight(w)) {
      Ball direct = euler_sum_eval(SignedComposition::from_composition(s),
                                   digits_to_bits(4));
      CHECK(overlaps(mzv_eval(s, digits_to_bits(20)), direct));
    }
  // weight-7 spot checks on the same agreement
  for (const char* text : {"7", "2,5", "3,1,3", "2,1,1,1,1,1", "4,2,1"}) {
    Composition s = Composition::parse(text);
    Ball direct = euler_sum_eval(SignedComposition::from_composition(s),
                                 digits_to_bits(4));
    CHECK(overlaps(mzv_eval(s, digits_to_bits(20)), direct));
  }

  // doubled precision nests
  Ball coarse = mzv_eval(Composition::parse("4,1,1"), digits_to_bits(15));
  Ball fine = mzv_eval(Composition::parse("4,1,1"), digits_to_bits(40));
  CHECK(contains(coarse, fine));
}

TEST_CASE("multiple polylogarithms") {
  Prec p = digits_to_bits(30);
  CBall li1 = multiple_polylog_eval({1}, {CBall::from_rats(Rat(1, 2), 0, p)}, p);
  CHECK(overlaps(li1.real(), Ball::log_two(256)));

  // dilogarithm: Li_2(1/2) = pi^2/12 - log(2)^2/2
  CBall li2 = multiple_polylog_eval({2}, {CBall::from_rats(Rat(1, 2), 0, p)}, p);
  Ball want = Ball::pi(p) * Ball::pi(p) / Ball::from_long(12, p) -
              Ball::log_two(p) * Ball::log_two(p) / Ball::from_long(2, p);
  CHECK(overlaps(li2.real(), want));

  // Li_{1,1}(1/2, 1) = log(2)^2/2 through the series route
  CBall li11 = multiple_polylog_eval(
      {1, 1}, {CBall::from_rats(Rat(1, 2), 0, p), CBall::from_long(1, p)}, p);
  Ball half_log2 = Ball::log_two(p) * Ball::log_two(p) / Ball::from_long(2, p);
  CHECK(overlaps(li11.real(), half_log2));

  // z = (x, 1, 1) equals the Euler-sum route
  CBall series = multiple_polylog_eval(
      {2, 1, 1},
      {CBall::from_rats(Rat(2, 5), 0, p), CBall::from_long(1, p),
       CBall::from_long(1, p)},
      p);
  Ball esum = euler_sum_eval(SignedComposition::parse("2,1,1", Rat(2, 5)), p);
  CHECK(overlaps(series.real(), esum));
  CHECK(overlaps(series.imag(), Ball::zero(64)));

  // complex argument with prefix products inside the disk
  CBall mixed = multiple_polylog_eval(
      {1, 1}, {CBall::from_rats(Rat(1, 4), Rat(1, 4), p),
               CBall::from_rats(Rat(0), Rat(2), p)}, p);
  CHECK(!mixed.real().mid_is_zero());

  // divergent and out-of-domain inputs
  CHECK_THROWS_AS(multiple_polylog_eval(
                      {1, 1}, {CBall::from_long(1, p), CBall::from_long(1, p)}, p),
                  MzvError);
  CHECK_THROWS_AS(multiple_polylog_eval(
                      {5, 5}, {CBall::from_long(3, p), CBall::from_long(1, p)}, p),
                  MzvError);

  // reduction route fires when a later prefix touches the unit circle:
  // Li_{2,1}(1, 1) = zeta(2,1)
  CBall reduced = multiple_polylog_eval(
      {2, 1}, {CBall::from_long(1, p), CBall::from_long(1, p)}, digits_to_bits(6));
  CHECK(overlaps(reduced.real(), zeta_riemann(3, 128)));
}

TEST_CASE("gauss 2F1") {
  Prec p = digits_to_bits(40);
  CBall one = CBall::from_long(1, p);
  CHECK(gauss_2f1(one, one, CBall::from_long(2, p), Ball::zero(p), p)
            .real()
            .to_string() == Ball::from_long(1, p + 16).to_string());
  // F(0,0;1;x) = 1
  CBall f00 = gauss_2f1(CBall::zero(p), CBall::zero(p), one,
                        rat_ball(Rat(9, 10), p), p);
  CHECK(contains(f00.real(), Ball::from_long(1, 300)));

  // F(1,1;2;1/2) = 2 log 2
  CBall f = gauss_2f1(one, one, CBall::from_long(2, p), rat_ball(Rat(1, 2), p), p);
  CHECK(overlaps(f.real(), Ball::log_two(p) * Ball::from_long(2, p)));

  CHECK_THROWS_AS(gauss_2f1(one, one, CBall::zero(p), rat_ball(Rat(1, 2), p), p),
                  MzvError);
  CHECK_THROWS_AS(gauss_2f1(one, one, CBall::from_long(2, p),
                            rat_ball(Rat(3, 2), p), p),
                  MzvError);
}

TEST_CASE("digamma near one") {
  Prec p = digits_to_bits(40);
  CBall psi1 = digamma_near_one(CBall::zero(p), p);
  CHECK(overlaps(psi1.real(), -Ball::euler_gamma(p)));

  // recurrence cross-check: psi(2) = psi(1) + 1 = 1 - gamma
  Ball psi2 = psi1.real() + Ball::from_long(1, p);
  CHECK(overlaps(psi2, Ball::from_long(1, p) - Ball::euler_gamma(p)));

  // independent summation oracle: psi(1+w) = -gamma + sum w/(n(n+w))
  CBall w = CBall::from_rats(Rat(0), Rat(3, 10), 128);
  CBall direct = CBall(-Ball::euler_gamma(128));
  for (long n = 1; n <= 200000; ++n) {
    CBall nb = CBall::from_long(n, 128);
    direct += w / (nb * (nb + w));
  }
  // tail of the oracle is below |w| / (M - 1)
  direct.real().add_error(Ball::from_rat(Rat(1, 300000), 64));
  direct.imag().add_error(Ball::from_rat(Rat(1, 300000), 64));
  CBall series = digamma_near_one(w, 128);
  CHECK(overlaps(series, direct));

  CHECK_THROWS_AS(digamma_near_one(CBall::from_long(1, p), p), MzvError);
}

TEST_CASE("g kernel") {
  Prec p = digits_to_bits(40);
  CBall g0 = g_kernel(CBall::zero(p), p);
  Ball near_zero = Ball::zero(64);
  near_zero.add_error(Ball::from_rat(Rat(1, 1000000000), 64));
  CHECK(contains(near_zero, g0.real()));
  CHECK(contains(near_zero, g0.imag()));

  CBall z = CBall::from_rats(Rat(3, 10), 0, p);
  CBall gz = g_kernel(z, p);
  CBall gmz = g_kernel(-z, p);
  CHECK(overlaps(gz, gmz));

  // series oracle G(z) = sum_j zeta(4j+3) z^{4j+2} with explicit tail
  Ball oracle = Ball::zero(p);
  for (long j = 0; j <= 20; ++j)
    oracle += rat_ball(rat_pow(Rat(3, 10), 4 * j + 2), p) * zeta_riemann(4 * j + 3, p);
  oracle.add_error(rat_ball(2 * rat_pow(Rat(3, 10), 86), 64));
  CHECK(overlaps(gz.real(), oracle));
}

TEST_CASE("a of z") {
  Prec p = digits_to_bits(40);
  CBall a0 = a_of_z(CBall::zero(p), p);
  CHECK(overlaps(a0.real(), Ball::from_long(1, 300)));

  // A'(0) = zeta(1bar) = -log 2, by central difference at high precision
  Prec hp = digits_to_bits(60);
  Rat h(1, 1000000000);
  CBall ah = a_of_z(CBall::from_rats(h, 0, hp), hp);
  CBall amh = a_of_z(CBall::from_rats(-h, 0, hp), hp);
  Ball deriv = (ah.real() - amh.real()) / rat_ball(2 * h, hp);
  deriv.add_error(rat_ball(h * h, 64));  // second-order difference error
  CHECK(overlaps(deriv, -Ball::log_two(hp)));

  // product oracle at 1e-15
  CBall half = CBall::from_rats(Rat(1, 2), 0, p);
  CBall gamma_route = a_of_z(half, p);
  CBall product = a_of_z_product(half, 60000, p);
  CHECK(overlaps(gamma_route, product));
  CHECK(Ball::mid_distance(gamma_route.real(), product.real()).upper().mid_double() <
        1e-15);
}

TEST_CASE("sinc product identity") {
  Prec p = digits_to_bits(40);
  auto [lhs1, rhs1] = sinc_zeta_product(rat_ball(Rat(1, 2), p), 1, p);
  Ball two_over_pi = Ball::from_long(2, p) / Ball::pi(p);
  CHECK(overlaps(lhs1.real(), two_over_pi));
  CHECK(overlaps(rhs1.real(), two_over_pi));

  auto [lhs0, rhs0] = sinc_zeta_product(Ball::zero(p), 2, p);
  CHECK(overlaps(lhs0.real(), Ball::from_long(1, p)));
  CHECK(overlaps(rhs0.real(), Ball::from_long(1, p)));

  auto [lhs2, rhs2] = sinc_zeta_product(rat_ball(Rat(1, 3), p), 2, p);
  CHECK(overlaps(lhs2.real(), rhs2.real()));
  CHECK(overlaps(rhs2.imag(), Ball::zero(64)));
}

TEST_CASE("new integral representation") {
  Prec p = digits_to_bits(20);
  Ball log2b = Ball::log_two(256);
  Ball i1 = new_integral_eval(Composition::parse("1"), {Rat(1, 2)}, 24, p);
  CHECK(overlaps(i1, log2b));

  Ball i2 = new_integral_eval(Composition::parse("2"), {Rat(1, 2)}, 24, p);
  Ball li2 = Ball::pi(256) * Ball::pi(256) / Ball::from_long(12, 256) -
             log2b * log2b / Ball::from_long(2, 256);
  CHECK(Ball::mid_distance(i2, li2).upper().mid_double() < 1e-10);

  Ball i11 = new_integral_eval(Composition::parse("1,1"), {Rat(1, 2), Rat(1, 2)}, 16, p);
  CBall s11 = multiple_polylog_eval(
      {1, 1}, {CBall::from_rats(Rat(1, 2), 0, p), CBall::from_rats(Rat(1, 2), 0, p)}, p);
  CHECK(Ball::mid_distance(i11, s11.real()).upper().mid_double() < 1e-8);

  CHECK_THROWS_AS(new_integral_eval(Composition::parse("1,1,1"),
                                    {Rat(1, 2), Rat(1, 2), Rat(1, 2)}, 8, p),
                  MzvError);
  CHECK_THROWS_AS(new_integral_eval(Composition::parse("2"), {Rat(2)}, 8, p),
                  MzvError);
  CHECK_THROWS_AS(new_integral_eval(Composition::parse("4"), {Rat(1, 2)}, 8, p),
                  MzvError);
}

TEST_CASE("gauss-legendre rule") {
  // integrate x^6 on (0,1): nodes mapped from (-1,1)
  Prec p = 128;
  GaussLegendreRule rule = gauss_legendre(8, p);
  Ball acc = Ball::zero(p);
  Ball half = Ball::from_rat(Rat(1, 2), p);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    Ball u = (rule.nodes[i] + Ball::from_long(1, p)) * half;
    acc += rule.weights[i] * half * pow_si(u, 6);
  }
  CHECK(overlaps(acc, Ball::from_rat(Rat(1, 7), 256)));
}
