/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <memory>
#include <vector>

#include "bakergamma/interval.hpp"
#include "bakergamma/polynomial.hpp"
#include "bakergamma/rational.hpp"

namespace bakergamma {

/// A real algebraic number: an integer minimal polynomial (irreducible,
/// primitive, positive leading coefficient) plus a rational isolating
/// interval containing exactly that one real root.
///
/// Degree-1 numbers are stored with a degenerate isolator [r, r]; rational
/// values are never special-cased downstream of this type. For degree >= 2
/// the isolator endpoints are never roots and carry opposite signs of the
/// polynomial, which the constructor verifies along with the Sturm root
/// count. Irreducibility is the caller's obligation; every producer in this
/// library (cyclotomic folds, reversals, rational lifts) guarantees it.
class AlgebraicNumber {
public:
    AlgebraicNumber(IntPolynomial minpoly, Rational iso_lo, Rational iso_hi);

    static AlgebraicNumber from_rational(const Rational& r);

    const IntPolynomial& minpoly() const { return poly_; }
    const Rational& iso_lo() const { return lo_; }
    const Rational& iso_hi() const { return hi_; }
    long degree() const { return poly_.degree(); }

    bool is_rational() const { return degree() == 1; }
    /// The exact value for degree-1 numbers; throws DomainError otherwise.
    Rational rational_value() const;

    /// Exact trichotomy against a rational point (the number itself is
    /// never equal to a rational unless it has degree 1).
    int compare(const Rational& r) const;
    /// Exact sign of the number.
    int sign() const { return compare(Rational(0)); }

    /// Shared Sturm chain of the minimal polynomial (empty for degree 1).
    const std::vector<IntPolynomial>& sturm() const;

private:
    IntPolynomial poly_;
    Rational lo_, hi_;
    std::shared_ptr<const std::vector<IntPolynomial>> chain_;
};

/// Enclosure of the isolated root with absolute width <= 2^(1-prec).
/// Exact bisection brackets the root; interval Newton does the heavy
/// contraction once the derivative is sign-definite on the bracket.
/// Throws PrecisionExhausted only if the internal ladder fails, which
/// cannot happen for well-formed inputs.
Interval refine(const AlgebraicNumber& a, mpfr_prec_t prec);

/// Exact equality as real numbers: same minimal polynomial and isolators
/// refined until they are disjoint or provably bracket the same root.
bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Exact trichotomy on real values: -1, 0 or +1.
int alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// 1/a for nonzero a: reversed minimal polynomial, inverted isolator.
AlgebraicNumber reciprocal(const AlgebraicNumber& a);

/// sin(pi*x) for rational x in (0,1) as an algebraic number. The minimal
/// polynomial comes from the cyclotomic fold: sin(pi p/q) = cos(2 pi k/m)
/// with k/m = (q-2p)/(4q) in lowest terms, and for gcd(k, m) = 1 that
/// cosine shares the minimal polynomial of cos(2 pi/m). The isolating
/// interval is cut from a rigorous sine enclosure, refined until the Sturm
/// count certifies a single root. Results are memoized.
AlgebraicNumber minpoly_sin(const Rational& x);

} // namespace bakergamma
