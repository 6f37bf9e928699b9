/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/gamma_eval.hpp"

#include "bakergamma/algebraic.hpp"
#include "bakergamma/errors.hpp"
#include "bernoulli.hpp"

namespace bakergamma {

namespace {

void require_prec(mpfr_prec_t prec, const char* what) {
    if (prec < 64) {
        throw DomainError(std::string(what) + ": precision below 64 bits");
    }
}

// Stirling series for log Gamma(z) at an exact rational z = x + shift,
// valid for z > 0 with the remainder after the B_{2k} term bounded in
// magnitude by the first omitted term. Returns an enclosure including the
// remainder bound, or nullopt when the series bottoms out before reaching
// the target (the caller then raises the shift).
std::optional<Interval> stirling_log_gamma(const mpq_class& z, mpfr_prec_t wp, long tail_exp) {
    const Interval zi = Interval::from_rational(Rational(z), wp);
    const Interval log_z = log(zi);
    const Interval two_pi = mul_q(Interval::pi(wp), mpq_class(2));

    // (z - 1/2) log z - z + log(2 pi)/2
    Interval sum = sub(mul(sub(zi, Interval::from_rational(Rational(1, 2), wp)), log_z), zi);
    sum = add(sum, mul_q(log(two_pi), mpq_class(1, 2)));

    const Interval inv_z = div(Interval::from_rational(Rational(1), wp), zi);
    const Interval inv_z2 = mul(inv_z, inv_z);
    Interval zpow = inv_z; // z^(1-2k) for the current k

    mpfr_t threshold, bound;
    mpfr_init2(threshold, 32);
    mpfr_init2(bound, 64);
    mpfr_set_ui_2exp(threshold, 1, static_cast<mpfr_exp_t>(tail_exp), MPFR_RNDN);

    // terms shrink until roughly k ~ pi*z; stop trying there
    const unsigned long k_max = mpz_class(3 * z.get_num() / z.get_den()).get_ui() + 16;
    bool converged = false;
    for (unsigned long k = 1; k <= k_max; ++k) {
        const mpq_class b2k = detail::bernoulli_2k(k);
        mpq_class coeff = b2k / mpq_class(2 * k * (2 * k - 1));
        sum = add(sum, mul_q(zpow, coeff));
        zpow = mul(zpow, inv_z2); // now z^(1-2(k+1))

        // remainder bound: first omitted term, |B_{2k+2}| / ((2k+2)(2k+1) z^(2k+1))
        mpq_class next = ::abs(detail::bernoulli_2k(k + 1)) / mpq_class((2 * k + 2) * (2 * k + 1));
        mpfr_mul_q(bound, zpow.hi(), next.get_mpq_t(), MPFR_RNDU);
        if (mpfr_cmp(bound, threshold) <= 0) {
            sum = add(sum, Interval::plus_minus(bound));
            converged = true;
            break;
        }
    }
    mpfr_clear(threshold);
    mpfr_clear(bound);
    if (!converged) {
        return std::nullopt;
    }
    return sum;
}

} // namespace

Interval log_gamma(const Rational& x, mpfr_prec_t prec) {
    require_unit_interval(x, "log_gamma");
    require_prec(prec, "log_gamma");

    const mpfr_prec_t wp = prec + 64;
    const long tail_exp = -static_cast<long>(wp) - 8;

    // initial shift sized so the series reaches the tail target comfortably;
    // doubled on the rare retry
    unsigned long shift = static_cast<unsigned long>(0.19 * static_cast<double>(wp)) + 8;
    for (int attempt = 0; attempt < 3; ++attempt, shift *= 2) {
        const mpq_class z = x.value() + shift;
        const auto series = stirling_log_gamma(z, wp, tail_exp);
        if (!series) {
            continue;
        }
        // log Gamma(x) = log Gamma(x + shift) - log((x)(x+1)...(x+shift-1))
        mpq_class poch = 1;
        for (unsigned long j = 0; j < shift; ++j) {
            poch *= x.value() + j;
        }
        const Interval result = sub(*series, log(Interval::from_rational(Rational(poch), wp)));
        return result.rounded_to(prec);
    }
    throw PrecisionExhausted("log_gamma: Stirling shift ladder exhausted");
}

Interval log_pi(mpfr_prec_t prec) {
    require_prec(prec, "log_pi");
    return log(Interval::pi(prec + 16)).rounded_to(prec);
}

Interval sin_pi_eval(const Rational& x, mpfr_prec_t prec) {
    require_unit_interval(x, "sin_pi_eval");
    if (x.den() <= kSinExactMaxDen) {
        return refine(minpoly_sin(x), prec);
    }
    return sin_pi(x, prec);
}

Interval f_eval(const Rational& x, mpfr_prec_t prec, FEvalMode mode) {
    require_unit_interval(x, "f_eval");
    require_prec(prec, "f_eval");

    const mpfr_prec_t wp = prec + 16;
    const Interval reflection = sub(log_pi(wp), log(sin_pi_eval(x, wp)));
    if (mode == FEvalMode::Fast) {
        return reflection.rounded_to(prec);
    }
    const Interval direct = add(log_gamma(x, wp), log_gamma(x.one_minus(), wp));
    const auto both = intersect(reflection, direct);
    if (!both) {
        throw DisagreementError("f_eval: reflection and log-gamma routes disagree at x = " +
                                x.str());
    }
    return both->rounded_to(prec);
}

Interval f_prime(const Rational& x, mpfr_prec_t prec) {
    require_unit_interval(x, "f_prime");
    require_prec(prec, "f_prime");

    const mpfr_prec_t wp = prec + 16;
    const Interval s = sin_pi_eval(x, wp);
    const Interval c = cos_pi(x, wp);
    const Interval result = neg(div(mul(Interval::pi(wp), c), s));
    return result.rounded_to(prec);
}

ResidualReport verify_reflection(const Rational& x, mpfr_prec_t prec) {
    require_unit_interval(x, "verify_reflection");
    require_prec(prec, "verify_reflection");

    const mpfr_prec_t wp = prec + 24;
    Interval residual = add(log_gamma(x, wp), log_gamma(x.one_minus(), wp));
    residual = sub(residual, log_pi(wp));
    residual = add(residual, log(sin_pi_eval(x, wp)));

    ResidualReport report;
    report.x = x;
    report.prec_bits = static_cast<long>(prec);
    report.residual = residual;
    report.pass = residual.contains_zero() && residual.width_at_most_pow2(16 - static_cast<long>(prec));
    return report;
}

} // namespace bakergamma
