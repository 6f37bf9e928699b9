/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/periods.hpp"

#include <algorithm>

#include "bakergamma/errors.hpp"

namespace bakergamma {

namespace {

bool is_one(const AlgebraicNumber& a) {
    return a.is_rational() && a.rational_value() == Rational(1);
}

// Positive margin requirement: the witness must clear zero by at least
// 2 ulp at the working precision.
bool excludes_zero_with_margin(const Interval& v, mpfr_prec_t wp) {
    const int s = v.sign();
    if (s == 0) return false;
    const long e = v.magnitude_exponent();
    mpfr_t margin;
    mpfr_init2(margin, 32);
    mpfr_set_ui_2exp(margin, 1, static_cast<mpfr_exp_t>(e - static_cast<long>(wp) + 1), MPFR_RNDN);
    bool ok;
    if (s > 0) {
        ok = mpfr_cmp(v.lo(), margin) >= 0;
    } else {
        mpfr_neg(margin, margin, MPFR_RNDN);
        ok = mpfr_cmp(v.hi(), margin) <= 0;
    }
    mpfr_clear(margin);
    return ok;
}

} // namespace

BakerPeriod normalize(const BakerPeriod& p) {
    std::vector<PeriodTerm> merged;
    for (const auto& term : p.terms()) {
        if (term.alpha.sign() <= 0) {
            throw DomainError("period: alpha must be a positive real algebraic number");
        }
        if (term.beta.is_zero() || is_one(term.alpha)) {
            continue;
        }
        bool found = false;
        for (auto& existing : merged) {
            if (alg_equal(existing.alpha, term.alpha)) {
                existing.beta = existing.beta + term.beta;
                found = true;
                break;
            }
        }
        if (!found) {
            merged.push_back(term);
        }
    }
    std::erase_if(merged, [](const PeriodTerm& t) { return t.beta.is_zero(); });
    std::sort(merged.begin(), merged.end(), [](const PeriodTerm& a, const PeriodTerm& b) {
        return alg_compare(a.alpha, b.alpha) < 0;
    });
    return BakerPeriod(std::move(merged));
}

BakerPeriod f_difference(const Rational& x1, const Rational& x2) {
    require_unit_interval(x1, "f_difference");
    require_unit_interval(x2, "f_difference");
    std::vector<PeriodTerm> terms;
    terms.push_back({Rational(1), minpoly_sin(x1)});
    terms.push_back({Rational(-1), minpoly_sin(x2)});
    return normalize(BakerPeriod(std::move(terms)));
}

NullityVerdict nullity(const BakerPeriod& p, mpfr_prec_t prec) {
    const BakerPeriod n = normalize(p);
    if (n.empty()) {
        return {NullityKind::Null, NullityReason::ExactSymmetry, std::nullopt};
    }
    for (mpfr_prec_t wp = prec; wp <= 4 * prec; wp *= 2) {
        Interval acc = Interval::zero(wp);
        for (const auto& term : n.terms()) {
            Interval enc = refine(term.alpha, wp);
            // alpha > 0 exactly; tighten in the rare case the enclosure
            // still touches zero
            mpfr_prec_t rp = wp;
            while (enc.sign() <= 0) {
                rp *= 2;
                enc = refine(term.alpha, rp);
            }
            acc = add(acc, mul_q(log(enc), term.beta.value()));
        }
        if (excludes_zero_with_margin(acc, wp)) {
            return {NullityKind::NonNull, NullityReason::IntervalSeparation, acc};
        }
    }
    return {NullityKind::Unknown, NullityReason::Merged, std::nullopt};
}

PeriodClass classify(const BakerPeriod& p, mpfr_prec_t prec) {
    switch (nullity(p, prec).kind) {
        case NullityKind::Null:
            return PeriodClass::Zero;
        case NullityKind::NonNull:
            return PeriodClass::Transcendental;
        default:
            return PeriodClass::Unknown;
    }
}

PairVerdict pair_classify(const Rational& x, const Rational& y, mpfr_prec_t prec) {
    require_unit_interval(x, "pair_classify");
    require_unit_interval(y, "pair_classify");
    if (y == x || y == x.one_minus()) {
        return {PairKind::NotApplicable, std::nullopt};
    }
    const NullityVerdict v = nullity(f_difference(x, y), prec);
    if (v.kind == NullityKind::NonNull) {
        return {PairKind::AtLeastOneTranscendental, v.witness};
    }
    if (v.kind == NullityKind::Null) {
        // sine is strictly monotone on each half-interval, so a
        // non-symmetric pair can never cancel
        throw DisagreementError("pair_classify: non-symmetric pair produced a null period");
    }
    return {PairKind::Undecided, std::nullopt};
}

} // namespace bakergamma
