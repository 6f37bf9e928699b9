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

#include <string>
#include <vector>

#include "bakergamma/interval.hpp"
#include "bakergamma/rational.hpp"

namespace bakergamma {

/// Dense integer polynomial, coefficients lowest degree first.
/// Invariant: the coefficient vector carries no trailing zeros, so the
/// leading coefficient is nonzero unless the polynomial is zero (empty
/// vector). Minimal polynomials are additionally primitive (content 1)
/// with positive leading coefficient.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial from_longs(std::initializer_list<long> coeffs);
    /// x^n - 1.
    static IntPolynomial xn_minus_one(unsigned long n);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& leading() const;
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    /// gcd of all coefficients (positive); 0 for the zero polynomial.
    mpz_class content() const;
    /// Divides out the content, keeping the sign of the leading coefficient.
    IntPolynomial primitive_part() const;
    /// Primitive with positive leading coefficient (canonical minimal-
    /// polynomial form).
    IntPolynomial canonical() const;

    IntPolynomial derivative() const;
    /// P(2x).
    IntPolynomial scale_arg_2() const;
    /// x^deg * P(1/x): reverses coefficients. Requires nonzero constant term.
    IntPolynomial reversed() const;

    mpq_class eval(const mpq_class& t) const;
    int sign_at(const mpq_class& t) const;
    /// Rigorous enclosure of P over the interval X.
    Interval eval_interval(const Interval& x) const;

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }
    /// Total order: by degree, then coefficients from the top down.
    bool operator<(const IntPolynomial& o) const;

    std::string str() const;

private:
    std::vector<mpz_class> c_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial neg(const IntPolynomial& a);
/// Exact quotient; throws DomainError when b does not divide a over Z.
IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b);

/// Sturm chain of a squarefree polynomial (primitive, sign-preserving
/// scaling at every step). Throws DomainError when a repeated root is
/// detected.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Number of real roots of the squarefree p in the open interval (a, b).
/// Endpoints must not be roots.
long count_roots(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b);
long count_roots(const IntPolynomial& p, const Rational& a, const Rational& b);

/// n-th cyclotomic polynomial, computed by exact division of x^n - 1 and
/// memoized. Throws DomainError for n = 0.
IntPolynomial cyclotomic(unsigned long n);

/// Minimal polynomial of 2*cos(2*pi/m) (the half-degree palindromic fold
/// of the m-th cyclotomic polynomial), lowest degree first.
IntPolynomial two_cos_minpoly(unsigned long m);

/// Minimal polynomial of cos(2*pi/m): the fold rescaled to the cosine
/// variable and made primitive.
IntPolynomial cos_minpoly(unsigned long m);

} // namespace bakergamma
