/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include "bakergamma/interval.hpp"
#include "bakergamma/rational.hpp"

namespace bakergamma {

/// Default working precision: ~1040 decimal digits, enough for
/// 1000-digit certificates with guard digits to spare.
inline constexpr mpfr_prec_t kDefaultPrecBits = 3456;

/// Largest denominator for which sin(pi x) is routed through the algebraic
/// module's refined root instead of direct interval sine. Beyond this the
/// cyclotomic fold's degree (phi(4q)/2) makes the exact path more expensive
/// than it is worth; both paths are rigorous.
inline constexpr unsigned long kSinExactMaxDen = 60;

enum class FEvalMode {
    Fast,   // reflection route log(pi) - log(sin(pi x)) only
    Verify, // both routes, intersected; disjoint enclosures are a bug
};

/// Enclosure of log Gamma(x) for rational x in (0,1), width <= 2^(8-prec).
/// Evaluated by shifting the argument upward until the Stirling series tail
/// is rigorously below target, then subtracting the log of the exact
/// Pochhammer product of the shift.
Interval log_gamma(const Rational& x, mpfr_prec_t prec);

/// Enclosure of log(pi), width <= 2^(4-prec).
Interval log_pi(mpfr_prec_t prec);

/// Enclosure of sin(pi x): refined algebraic root for den(x) <= 60,
/// direct interval sine otherwise.
Interval sin_pi_eval(const Rational& x, mpfr_prec_t prec);

/// Enclosure of f(x) = log Gamma(x) + log Gamma(1-x).
/// Throws DisagreementError if, in Verify mode, the two evaluation routes
/// produce disjoint enclosures.
Interval f_eval(const Rational& x, mpfr_prec_t prec, FEvalMode mode = FEvalMode::Fast);

/// Enclosure of f'(x) = -pi * cot(pi x).
Interval f_prime(const Rational& x, mpfr_prec_t prec);

/// Residual certificate for the reflection identity at x:
/// log Gamma(x) + log Gamma(1-x) - log(pi) + log(sin(pi x)).
struct ResidualReport {
    Rational x;
    long prec_bits = 0;
    Interval residual;
    bool pass = false; // residual contains 0 and width <= 2^(16-prec)

    ResidualReport() : residual(64) {}
};

ResidualReport verify_reflection(const Rational& x, mpfr_prec_t prec);

} // namespace bakergamma
