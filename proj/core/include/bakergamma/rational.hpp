/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "bakergamma/errors.hpp"

namespace bakergamma {

/// Reduced fraction num/den with den >= 1 and gcd(|num|, den) = 1.
/// All constructors canonicalize; arithmetic stays canonical.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q);

    /// Parses "p/q" or a bare integer "p". Throws DomainError on malformed
    /// input or zero denominator.
    static Rational parse(const std::string& text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    /// True iff 0 < *this < 1 exactly.
    bool in_unit_interval() const { return q_ > 0 && q_ < 1; }

    /// The reflection partner 1 - x.
    Rational one_minus() const { return Rational(mpq_class(1 - q_)); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_class q_; // invariant: canonical
};

/// Returns num/den in lowest terms with positive denominator.
/// Throws DomainError when den = 0.
Rational reduce(const mpz_class& num, const mpz_class& den);

/// True iff 0 < x < 1 exactly.
inline bool in_unit_interval(const Rational& x) { return x.in_unit_interval(); }

/// Throws DomainError unless 0 < x < 1.
void require_unit_interval(const Rational& x, const char* what);

} // namespace bakergamma
