/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "bakergamma/rational.hpp"

namespace bakergamma {

/// Rigorous enclosure [lo, hi] of a real number, endpoints in binary
/// floating point at a fixed working precision.
///
/// Contract: the represented true value always lies in [lo, hi], and every
/// operation rounds lo downward and hi upward (outward rounding). Primitive
/// operations widen each endpoint by at most 1 ulp of the working precision
/// beyond the exact image, so a point-input operation returns a result of
/// width <= 2 ulp.
///
/// Values are immutable after construction apart from assignment; all
/// operations are pure, so intervals are safe for unrestricted parallel use.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    /// Smallest prec-bit enclosure of an exact rational.
    static Interval from_rational(const Rational& x, mpfr_prec_t prec);
    /// Outward-rounded enclosure of [lo, hi]; requires lo <= hi.
    static Interval from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
    /// Exact copy of two mpfr endpoints; requires lo <= hi.
    static Interval from_mpfr(mpfr_srcptr lo, mpfr_srcptr hi);
    /// [-bound, +bound] for a nonnegative mpfr bound.
    static Interval plus_minus(mpfr_srcptr bound);
    static Interval zero(mpfr_prec_t prec);

    /// 1-ulp enclosures of the constants.
    static Interval pi(mpfr_prec_t prec);
    static Interval e(mpfr_prec_t prec);

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_prec_t prec() const { return prec_; }

    bool contains_zero() const;
    bool contains(const Rational& x) const;
    /// +1 if the whole interval is > 0, -1 if < 0, 0 if it meets zero.
    int sign() const;

    /// Exact rational value of an endpoint (endpoints are always finite).
    Rational lo_rational() const;
    Rational hi_rational() const;
    /// Exact width hi - lo.
    Rational width_rational() const;
    /// Exact midpoint (lo + hi)/2.
    Rational mid_rational() const;
    /// Midpoint rounded to this interval's precision.
    void mid(mpfr_ptr out) const;

    /// width <= 2^e, decided exactly.
    bool width_at_most_pow2(long e) const;

    /// max over nonzero endpoints of mpfr_get_exp; INT_MIN-ish when the
    /// interval is [0, 0].
    long magnitude_exponent() const;

    /// Outward re-rounding to a new precision.
    Interval rounded_to(mpfr_prec_t prec) const;

    /// Debug rendering "[lo, hi]" with a short mantissa.
    std::string brief() const;

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Binary operations evaluate at max(a.prec, b.prec); the result encloses the
// exact image of all point pairs from the inputs.
Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
/// Throws DomainError when the divisor interval contains zero.
Interval div(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval abs(const Interval& a);
/// Throws DomainError when a.lo <= 0.
Interval log(const Interval& a);
Interval exp(const Interval& a);

// Exact-scalar variants (no enclosure needed for the scalar).
Interval add_z(const Interval& a, const mpz_class& c);
Interval mul_q(const Interval& a, const mpq_class& c);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

/// Empty optional when the intervals are disjoint.
std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
bool overlap(const Interval& a, const Interval& b);
/// a.hi < b.lo: every point of a is below every point of b.
bool definitely_less(const Interval& a, const Interval& b);

/// Rigorous enclosure of sin(pi * x) for an exact rational x. The argument
/// is folded exactly into [0, 1/2] using the period and reflection
/// symmetries of sine, so x and 1 - x produce identical enclosures.
Interval sin_pi(const Rational& x, mpfr_prec_t prec);
/// cos(pi * x) = sin(pi * (x + 1/2)), folded the same way.
Interval cos_pi(const Rational& x, mpfr_prec_t prec);

} // namespace bakergamma
