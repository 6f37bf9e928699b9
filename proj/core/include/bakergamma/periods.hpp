/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <optional>
#include <vector>

#include "bakergamma/algebraic.hpp"
#include "bakergamma/interval.hpp"
#include "bakergamma/rational.hpp"

namespace bakergamma {

/// One summand beta * log(alpha) of a Baker period. Coefficients are kept
/// rational (every period this toolkit generates has small rational
/// coefficients), and each alpha must be a positive real algebraic number.
struct PeriodTerm {
    Rational beta;
    AlgebraicNumber alpha;
};

/// Formal sum of beta_i * log(alpha_i). The empty term list is the zero
/// period. In normalized form no alpha equals 1, no two terms share equal
/// alphas, no coefficient is zero, and terms are sorted by alpha ascending.
class BakerPeriod {
public:
    BakerPeriod() = default;
    explicit BakerPeriod(std::vector<PeriodTerm> terms) : terms_(std::move(terms)) {}

    const std::vector<PeriodTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

private:
    std::vector<PeriodTerm> terms_;
};

/// Merges equal alphas, drops zero coefficients and alpha = 1 terms, sorts
/// canonically. Idempotent and independent of input term order. Throws
/// DomainError on a non-positive alpha.
BakerPeriod normalize(const BakerPeriod& p);

/// The period of f(x1) - f(x2) under the reflection route:
/// log sin(pi x1) - log sin(pi x2), normalized. Symmetric pairs
/// (x2 = 1 - x1) and equal pairs cancel to the zero period exactly.
BakerPeriod f_difference(const Rational& x1, const Rational& x2);

enum class NullityKind { Null, NonNull, Unknown };
enum class NullityReason {
    ExactSymmetry,      // normalization emptied the term list
    IntervalSeparation, // a witness enclosure excludes zero
    Merged,             // normalized but numerically undecided
};

/// Outcome of the nullity decision. NonNull verdicts always carry a witness
/// enclosure with lo > 0 or hi < 0.
struct NullityVerdict {
    NullityKind kind = NullityKind::Unknown;
    NullityReason reason = NullityReason::Merged;
    std::optional<Interval> witness;
};

/// Null iff the normalized term list is empty (exact). NonNull when the
/// interval value of the sum excludes zero with a margin of at least 2 ulp
/// at working precision; near-misses retry at doubled precision up to four
/// times the starting precision before conceding Unknown.
NullityVerdict nullity(const BakerPeriod& p, mpfr_prec_t prec);

enum class PeriodClass { Zero, Transcendental, Unknown };

/// Zero iff nullity is Null; Transcendental iff NonNull (a non-null Baker
/// period is transcendental, taken as an axiom); Unknown otherwise.
PeriodClass classify(const BakerPeriod& p, mpfr_prec_t prec);

enum class PairKind { NotApplicable, AtLeastOneTranscendental, Undecided };

/// Verdict for the pair {log(pi/sin(pi x)), log(pi/sin(pi y))}.
struct PairVerdict {
    PairKind kind = PairKind::Undecided;
    std::optional<Interval> witness;
};

/// NotApplicable when y = x or y = 1 - x exactly (excluded hypotheses);
/// otherwise reports that at least one element of the pair is
/// transcendental, with the non-null witness for the difference period.
PairVerdict pair_classify(const Rational& x, const Rational& y, mpfr_prec_t prec);

} // namespace bakergamma
