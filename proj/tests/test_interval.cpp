#include <random>

#include "doctest.h"

#include "bakergamma/decimal.hpp"
#include "bakergamma/errors.hpp"
#include "bakergamma/interval.hpp"
#include "oracles.hpp"

using namespace bakergamma;

namespace {

Interval rand_interval(std::mt19937_64& rng, mpfr_prec_t prec, bool positive = false) {
    std::uniform_int_distribution<long> num(positive ? 1 : -10000, 10000);
    std::uniform_int_distribution<long> den(1, 10000);
    std::uniform_int_distribution<long> wid(0, 1000);
    const Rational a(num(rng), den(rng));
    const Rational b = a + Rational(wid(rng), 100000);
    return Interval::from_endpoints(a, b, prec);
}

bool contains_interval(const Interval& outer, const Interval& inner) {
    return mpfr_cmp(outer.lo(), inner.lo()) <= 0 && mpfr_cmp(inner.hi(), outer.hi()) <= 0;
}

} // namespace

TEST_CASE("point arithmetic encloses exact results") {
    const Interval two = Interval::from_rational(Rational(2), 128);
    const Interval three = Interval::from_rational(Rational(3), 128);
    CHECK(add(two, three).contains(Rational(5)));
    CHECK(sub(two, three).contains(Rational(-1)));
    CHECK(mul(two, three).contains(Rational(6)));
    CHECK(div(two, three).contains(Rational(2, 3)));
    CHECK(add(two, three).width_at_most_pow2(-120));
}

TEST_CASE("log of an exact point 1 collapses to zero") {
    const Interval one = Interval::from_rational(Rational(1), 256);
    const Interval l = log(one);
    CHECK(l.contains_zero());
    CHECK(l.width_at_most_pow2(1 - 256));
}

TEST_CASE("log of an independent e enclosure contains 1") {
    const Interval e = oracles::e_enclosure(100, 400);
    const Interval l = log(e);
    CHECK(l.contains(Rational(1)));
    CHECK(l.width_at_most_pow2(-320));
    // and the library's own e agrees with the series
    CHECK(overlap(Interval::e(400), e));
}

TEST_CASE("exp and log are inverse up to enclosure") {
    const Interval pi = Interval::pi(256);
    CHECK(overlap(exp(log(pi)), pi));
    CHECK(contains_interval(exp(log(pi)), Interval::pi(320).rounded_to(256)));
    const Interval zero = Interval::zero(128);
    CHECK(exp(zero).contains(Rational(1)));
}

TEST_CASE("domain errors") {
    const Interval z = Interval::from_endpoints(Rational(-1), Rational(1), 64);
    CHECK_THROWS_AS(log(z), DomainError);
    CHECK_THROWS_AS(div(Interval::from_rational(Rational(1), 64), z), DomainError);
    CHECK_THROWS_AS(Interval::from_endpoints(Rational(2), Rational(1), 64), DomainError);
    const Interval touching = Interval::from_endpoints(Rational(0), Rational(1), 64);
    CHECK_THROWS_AS(log(touching), DomainError);
}

TEST_CASE("containment is monotone under widening") {
    std::mt19937_64 rng(987654);
    for (int i = 0; i < 200; ++i) {
        const Interval a = rand_interval(rng, 128, true);
        const Interval b = rand_interval(rng, 128, true);
        const Interval wide_a = hull(a, rand_interval(rng, 128, true));
        const Interval wide_b = hull(b, rand_interval(rng, 128, true));
        CHECK(contains_interval(add(wide_a, wide_b), add(a, b)));
        CHECK(contains_interval(sub(wide_a, wide_b), sub(a, b)));
        CHECK(contains_interval(mul(wide_a, wide_b), mul(a, b)));
        CHECK(contains_interval(log(wide_a), log(a)));
        if (!wide_b.contains_zero()) {
            CHECK(contains_interval(div(wide_a, wide_b), div(a, b)));
        }
    }
}

TEST_CASE("outward rounding nests across precision") {
    // the same expression at prec and 2*prec: the high-precision enclosure
    // sits inside the low-precision one
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<long> num(1, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 10000; ++i) {
        const Rational x(num(rng), den(rng));
        auto eval = [&](mpfr_prec_t prec) {
            const Interval xi = Interval::from_rational(x, prec);
            const Interval one = Interval::from_rational(Rational(1), prec);
            return sub(mul(log(add(xi, one)), Interval::pi(prec)), exp(div(one, add(xi, one))));
        };
        const Interval low = eval(96);
        const Interval high = eval(192);
        CHECK(contains_interval(low, high));
    }
}

TEST_CASE("sin_pi folds rationals exactly") {
    const Interval half = sin_pi(Rational(1, 2), 256);
    CHECK(half.contains(Rational(1)));
    CHECK(half.width_rational() == Rational(0)); // exact point

    // sin(pi/4) = sqrt(2)/2: compare against a directed mpfr sqrt
    const Interval quarter = sin_pi(Rational(1, 4), 256);
    mpfr_t s_lo, s_hi;
    mpfr_init2(s_lo, 256);
    mpfr_init2(s_hi, 256);
    mpfr_sqrt_ui(s_lo, 2, MPFR_RNDD);
    mpfr_sqrt_ui(s_hi, 2, MPFR_RNDU);
    mpfr_div_2ui(s_lo, s_lo, 1, MPFR_RNDD);
    mpfr_div_2ui(s_hi, s_hi, 1, MPFR_RNDU);
    CHECK(overlap(quarter, Interval::from_mpfr(s_lo, s_hi)));
    mpfr_clear(s_lo);
    mpfr_clear(s_hi);

    SUBCASE("reflection pairs produce identical enclosures") {
        for (long q : {5L, 7L, 12L, 101L}) {
            for (long p = 1; p < q; ++p) {
                const Interval a = sin_pi(Rational(p, q), 200);
                const Interval b = sin_pi(Rational(q - p, q), 200);
                CHECK(mpfr_equal_p(a.lo(), b.lo()));
                CHECK(mpfr_equal_p(a.hi(), b.hi()));
            }
        }
    }

    SUBCASE("periodicity and sign flips") {
        const Interval base = sin_pi(Rational(1, 3), 200);
        const Interval shifted = sin_pi(Rational(7, 3), 200); // 1/3 + 2
        CHECK(mpfr_equal_p(base.lo(), shifted.lo()));
        const Interval negated = sin_pi(Rational(4, 3), 200); // 1/3 + 1
        CHECK(mpfr_equal_p(negated.hi(), neg(base).hi()));
        CHECK(sin_pi(Rational(0), 64).contains_zero());
        CHECK(sin_pi(Rational(2), 64).width_rational() == Rational(0));
    }

    SUBCASE("cos_pi at the center is exactly zero") {
        const Interval c = cos_pi(Rational(1, 2), 128);
        CHECK(c.contains_zero());
        CHECK(c.width_rational() == Rational(0));
    }
}

TEST_CASE("negation and absolute value") {
    const Interval m = Interval::from_endpoints(Rational(-3), Rational(-2), 64);
    CHECK(neg(m).contains(Rational(5, 2)));
    CHECK(abs(m).contains(Rational(5, 2)));
    CHECK_FALSE(abs(m).contains(Rational(-5, 2)));
    const Interval straddle = Interval::from_endpoints(Rational(-2), Rational(1), 64);
    const Interval a = abs(straddle);
    CHECK(mpfr_sgn(a.lo()) == 0);
    CHECK(a.contains(Rational(2)));
    CHECK(a.contains(Rational(1)));
    const Interval pos = Interval::from_endpoints(Rational(2), Rational(3), 64);
    CHECK(abs(pos).contains(Rational(5, 2)));
}

TEST_CASE("interval set operations") {
    const Interval a = Interval::from_endpoints(Rational(0), Rational(2), 64);
    const Interval b = Interval::from_endpoints(Rational(1), Rational(3), 64);
    const Interval c = Interval::from_endpoints(Rational(5, 2), Rational(4), 64);
    CHECK(overlap(a, b));
    CHECK_FALSE(overlap(a, c));
    CHECK(definitely_less(a, c));
    CHECK_FALSE(definitely_less(a, b));
    auto meet = intersect(a, b);
    REQUIRE(meet.has_value());
    CHECK(meet->contains(Rational(3, 2)));
    CHECK_FALSE(intersect(a, c).has_value());
    CHECK(hull(a, c).contains(Rational(3)));
}

TEST_CASE("decimal output truncates and stays certified") {
    const Interval pi = Interval::pi(256);
    CHECK(interval_mid_decimal(pi, 10) == "3.1415926535");
    CHECK(interval_mid_decimal(neg(pi), 4) == "-3.1415");
    const std::string w = interval_width_decimal(pi, 10);
    CHECK(w == "1.1e-10"); // truncation granularity dominates the 1-ulp width
}
