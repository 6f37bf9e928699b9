/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/interval.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

#include "bakergamma/errors.hpp"

namespace bakergamma {

namespace {

constexpr mpfr_prec_t kMinPrec = 8;

mpfr_prec_t clamp_prec(mpfr_prec_t p) {
    return std::max<mpfr_prec_t>(p, kMinPrec);
}

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
    return std::max(a.prec(), b.prec());
}

// Exact rational from a finite mpfr value.
Rational to_rational(mpfr_srcptr v) {
    assert(mpfr_number_p(v));
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return Rational(q);
}

} // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(clamp_prec(prec)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, kMinPrec);
    mpfr_init2(hi_, kMinPrec);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, x.value().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, x.value().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (lo > hi) {
        throw DomainError("interval: inverted endpoints");
    }
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.value().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.value().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_mpfr(mpfr_srcptr lo, mpfr_srcptr hi) {
    if (mpfr_cmp(lo, hi) > 0) {
        throw DomainError("interval: inverted endpoints");
    }
    Interval r(std::max(mpfr_get_prec(lo), mpfr_get_prec(hi)));
    mpfr_set(r.lo_, lo, MPFR_RNDD); // exact: target precision >= source
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
}

Interval Interval::plus_minus(mpfr_srcptr bound) {
    assert(mpfr_sgn(bound) >= 0);
    Interval r(mpfr_get_prec(bound));
    mpfr_neg(r.lo_, bound, MPFR_RNDD);
    mpfr_set(r.hi_, bound, MPFR_RNDU);
    return r;
}

Interval Interval::zero(mpfr_prec_t prec) {
    return Interval(prec);
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::e(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_t one;
    mpfr_init2(one, kMinPrec);
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_exp(r.lo_, one, MPFR_RNDD);
    mpfr_exp(r.hi_, one, MPFR_RNDU);
    mpfr_clear(one);
    return r;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const Rational& x) const {
    return mpfr_cmp_q(lo_, x.value().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, x.value().get_mpq_t()) >= 0;
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

Rational Interval::lo_rational() const { return to_rational(lo_); }
Rational Interval::hi_rational() const { return to_rational(hi_); }

Rational Interval::width_rational() const {
    return hi_rational() - lo_rational();
}

Rational Interval::mid_rational() const {
    return (lo_rational() + hi_rational()) * Rational(1, 2);
}

void Interval::mid(mpfr_ptr out) const {
    mpfr_add(out, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(out, out, 1, MPFR_RNDN);
}

bool Interval::width_at_most_pow2(long e) const {
    mpq_class w = width_rational().value();
    mpq_class bound;
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        bound = p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        bound = mpq_class(1) / mpq_class(p);
    }
    return w <= bound;
}

long Interval::magnitude_exponent() const {
    long e = LONG_MIN;
    if (mpfr_sgn(lo_) != 0) e = std::max(e, static_cast<long>(mpfr_get_exp(lo_)));
    if (mpfr_sgn(hi_) != 0) e = std::max(e, static_cast<long>(mpfr_get_exp(hi_)));
    return e;
}

Interval Interval::rounded_to(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

std::string Interval::brief() const {
    char* ls = nullptr;
    char* hs = nullptr;
    mpfr_asprintf(&ls, "%.12Rg", lo_);
    mpfr_asprintf(&hs, "%.12Rg", hi_);
    std::string out = std::string("[") + ls + ", " + hs + "]";
    mpfr_free_str(ls);
    mpfr_free_str(hs);
    return out;
}

Interval add(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b));
    mpfr_add(const_cast<mpfr_ptr>(r.lo()), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(const_cast<mpfr_ptr>(r.hi()), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

Interval sub(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b));
    mpfr_sub(const_cast<mpfr_ptr>(r.lo()), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(const_cast<mpfr_ptr>(r.hi()), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

Interval mul(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = join_prec(a, b);
    Interval r(p);
    mpfr_t t, lo, hi;
    mpfr_init2(t, p);
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);

    mpfr_mul(lo, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(lo, lo, t, MPFR_RNDD);
    mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(lo, lo, t, MPFR_RNDD);
    mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(lo, lo, t, MPFR_RNDD);

    mpfr_mul(hi, a.lo(), b.lo(), MPFR_RNDU);
    mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);
    mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);
    mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);

    mpfr_set(const_cast<mpfr_ptr>(r.lo()), lo, MPFR_RNDD);
    mpfr_set(const_cast<mpfr_ptr>(r.hi()), hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

Interval div(const Interval& a, const Interval& b) {
    if (b.contains_zero()) {
        throw DomainError("interval: division by interval containing zero");
    }
    const mpfr_prec_t p = join_prec(a, b);
    Interval r(p);
    mpfr_t t, lo, hi;
    mpfr_init2(t, p);
    mpfr_init2(lo, p);
    mpfr_init2(hi, p);

    mpfr_div(lo, a.lo(), b.lo(), MPFR_RNDD);
    mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
    mpfr_min(lo, lo, t, MPFR_RNDD);
    mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
    mpfr_min(lo, lo, t, MPFR_RNDD);
    mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
    mpfr_min(lo, lo, t, MPFR_RNDD);

    mpfr_div(hi, a.lo(), b.lo(), MPFR_RNDU);
    mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);
    mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);
    mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);

    mpfr_set(const_cast<mpfr_ptr>(r.lo()), lo, MPFR_RNDD);
    mpfr_set(const_cast<mpfr_ptr>(r.hi()), hi, MPFR_RNDU);
    mpfr_clear(t);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

Interval neg(const Interval& a) {
    Interval r(a.prec());
    mpfr_neg(const_cast<mpfr_ptr>(r.lo()), a.hi(), MPFR_RNDD);
    mpfr_neg(const_cast<mpfr_ptr>(r.hi()), a.lo(), MPFR_RNDU);
    return r;
}

Interval abs(const Interval& a) {
    Interval r(a.prec());
    if (mpfr_sgn(a.lo()) >= 0) {
        return a;
    }
    if (mpfr_sgn(a.hi()) <= 0) {
        return neg(a);
    }
    // straddles zero: [0, max(|lo|, hi)]
    mpfr_set_zero(const_cast<mpfr_ptr>(r.lo()), 1);
    mpfr_t t;
    mpfr_init2(t, a.prec());
    mpfr_neg(t, a.lo(), MPFR_RNDU);
    mpfr_max(const_cast<mpfr_ptr>(r.hi()), t, a.hi(), MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval log(const Interval& a) {
    if (mpfr_sgn(a.lo()) <= 0) {
        throw DomainError("interval: log of interval touching zero");
    }
    Interval r(a.prec());
    mpfr_log(const_cast<mpfr_ptr>(r.lo()), a.lo(), MPFR_RNDD);
    mpfr_log(const_cast<mpfr_ptr>(r.hi()), a.hi(), MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.prec());
    mpfr_exp(const_cast<mpfr_ptr>(r.lo()), a.lo(), MPFR_RNDD);
    mpfr_exp(const_cast<mpfr_ptr>(r.hi()), a.hi(), MPFR_RNDU);
    return r;
}

Interval add_z(const Interval& a, const mpz_class& c) {
    Interval r(a.prec());
    mpfr_add_z(const_cast<mpfr_ptr>(r.lo()), a.lo(), c.get_mpz_t(), MPFR_RNDD);
    mpfr_add_z(const_cast<mpfr_ptr>(r.hi()), a.hi(), c.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval mul_q(const Interval& a, const mpq_class& c) {
    Interval r(a.prec());
    if (sgn(c) >= 0) {
        mpfr_mul_q(const_cast<mpfr_ptr>(r.lo()), a.lo(), c.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(const_cast<mpfr_ptr>(r.hi()), a.hi(), c.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(const_cast<mpfr_ptr>(r.lo()), a.hi(), c.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(const_cast<mpfr_ptr>(r.hi()), a.lo(), c.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = join_prec(a, b);
    Interval r(p);
    mpfr_max(const_cast<mpfr_ptr>(r.lo()), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(const_cast<mpfr_ptr>(r.hi()), a.hi(), b.hi(), MPFR_RNDU);
    if (mpfr_cmp(r.lo(), r.hi()) > 0) {
        return std::nullopt;
    }
    return r;
}

Interval hull(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b));
    mpfr_min(const_cast<mpfr_ptr>(r.lo()), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(const_cast<mpfr_ptr>(r.hi()), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

bool overlap(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.lo(), b.hi()) <= 0 && mpfr_cmp(b.lo(), a.hi()) <= 0;
}

bool definitely_less(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi(), b.lo()) < 0;
}

Interval sin_pi(const Rational& x, mpfr_prec_t prec) {
    // Fold x into [0, 1/2] exactly; every identity used is exact on
    // rationals: sin(pi(x + 2)) = sin(pi x), sin(pi(1 + u)) = -sin(pi u),
    // sin(pi(1 - u)) = sin(pi u).
    mpq_class u = x.value();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), mpq_class(u / 2).get_num().get_mpz_t(),
               mpq_class(u / 2).get_den().get_mpz_t());
    u -= 2 * mpq_class(fl);
    // u in [0, 2)
    int sign = 1;
    if (u > 1) {
        sign = -1;
        u -= 1;
    }
    if (u == 0 || u == 1) {
        return Interval::zero(prec);
    }
    if (u > mpq_class(1, 2)) {
        u = 1 - u;
    }
    Interval r(prec);
    if (u == mpq_class(1, 2)) {
        mpfr_set_si(const_cast<mpfr_ptr>(r.lo()), sign, MPFR_RNDD);
        mpfr_set_si(const_cast<mpfr_ptr>(r.hi()), sign, MPFR_RNDU);
        return r;
    }
    // 0 < u < 1/2: t = pi*u lies in (0, pi/2); sine is positive and concave
    // there, so the extrema over a t-interval sit at its endpoints.
    const mpfr_prec_t wp = prec + 8;
    mpfr_t pi_lo, pi_hi, t_lo, t_hi, s1, s2;
    mpfr_init2(pi_lo, wp);
    mpfr_init2(pi_hi, wp);
    mpfr_init2(t_lo, wp);
    mpfr_init2(t_hi, wp);
    mpfr_init2(s1, wp);
    mpfr_init2(s2, wp);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_mul_q(t_lo, pi_lo, u.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(t_hi, pi_hi, u.get_mpq_t(), MPFR_RNDU);

    mpfr_sin(s1, t_lo, MPFR_RNDD);
    mpfr_sin(s2, t_hi, MPFR_RNDD);
    mpfr_min(s1, s1, s2, MPFR_RNDD);

    // Upper bound: if [t_lo, t_hi] cannot reach pi/2 the sine is increasing
    // there and sin(t_hi) rounded up is valid; once the interval may contain
    // pi/2 the only safe cap is 1.
    mpfr_t h1, half_pi_lo;
    mpfr_init2(h1, wp);
    mpfr_init2(half_pi_lo, wp);
    mpfr_div_2ui(half_pi_lo, pi_lo, 1, MPFR_RNDD);
    if (mpfr_cmp(t_hi, half_pi_lo) < 0) {
        mpfr_sin(h1, t_hi, MPFR_RNDU);
    } else {
        mpfr_set_ui(h1, 1, MPFR_RNDU);
    }

    if (sign > 0) {
        mpfr_set(const_cast<mpfr_ptr>(r.lo()), s1, MPFR_RNDD);
        mpfr_set(const_cast<mpfr_ptr>(r.hi()), h1, MPFR_RNDU);
    } else {
        mpfr_neg(const_cast<mpfr_ptr>(r.lo()), h1, MPFR_RNDD);
        mpfr_neg(const_cast<mpfr_ptr>(r.hi()), s1, MPFR_RNDU);
    }
    mpfr_clear(pi_lo);
    mpfr_clear(pi_hi);
    mpfr_clear(t_lo);
    mpfr_clear(t_hi);
    mpfr_clear(s1);
    mpfr_clear(s2);
    mpfr_clear(h1);
    mpfr_clear(half_pi_lo);
    return r;
}

Interval cos_pi(const Rational& x, mpfr_prec_t prec) {
    return sin_pi(x + Rational(1, 2), prec);
}

} // namespace bakergamma
