/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/theorems.hpp"

#include <numeric>

#include "bakergamma/errors.hpp"

namespace bakergamma {

namespace {

const Rational kHalf(1, 2);

void require_prec64(mpfr_prec_t prec, const char* what) {
    if (prec < 64) {
        throw DomainError(std::string(what) + ": precision below 64 bits");
    }
}

} // namespace

HypotheticalExceptionSet::HypotheticalExceptionSet(std::set<Rational> members)
    : members_(std::move(members)) {
    for (const auto& x : members_) {
        require_unit_interval(x, "exception set");
    }
}

HypotheticalExceptionSet HypotheticalExceptionSet::parse(const std::string& csv) {
    if (!csv.empty() && csv.back() == ',') {
        throw DomainError("exception set: trailing comma in '" + csv + "'");
    }
    std::set<Rational> members;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string token = csv.substr(pos, comma - pos);
        // trim surrounding whitespace
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first != std::string::npos) {
            members.insert(Rational::parse(token.substr(first, last - first + 1)));
        } else if (!token.empty() || !csv.empty()) {
            throw DomainError("exception set: empty entry in '" + csv + "'");
        }
        pos = comma + 1;
    }
    return HypotheticalExceptionSet(std::move(members));
}

bool halfinterval_bound_check(const HypotheticalExceptionSet& s) {
    std::size_t left = 0;
    std::size_t right = 0;
    for (const auto& x : s.members()) {
        if (x <= kHalf) ++left;
        if (x >= kHalf) ++right;
    }
    return left <= 1 && right <= 1;
}

bool symmetry_closure_check(const HypotheticalExceptionSet& s) {
    for (const auto& x : s.members()) {
        if (!s.contains(x.one_minus())) {
            return false;
        }
    }
    return true;
}

ExceptionVerdict exception_set_analyze(const HypotheticalExceptionSet& s) {
    ExceptionVerdict v;
    if (s.size() > 2) {
        v.violation = Violation::MoreThanTwo;
        return v;
    }
    if (!halfinterval_bound_check(s)) {
        v.violation = Violation::HalfIntervalBound;
        return v;
    }
    if (!symmetry_closure_check(s)) {
        v.violation = Violation::SymmetryClosure;
        return v;
    }
    v.consistent = true;
    if (s.size() == 0) {
        v.theorem_case = TheoremCase::I;
        v.log_pi_status = LogPiStatus::Transcendental;
    } else if (s.size() == 1) {
        // a consistent singleton is self-symmetric, hence {1/2}
        v.theorem_case = TheoremCase::II;
        v.log_pi_status = LogPiStatus::Algebraic;
    } else {
        v.theorem_case = TheoremCase::III;
        v.log_pi_status = LogPiStatus::Transcendental;
    }
    return v;
}

bool criteria_statement(const HypotheticalExceptionSet& s) {
    const ExceptionVerdict v = exception_set_analyze(s);
    if (!v.consistent) {
        throw DomainError("criteria: exception set is inconsistent");
    }
    return s.size() == 1 && s.contains(kHalf);
}

bool appendix_check(unsigned long max_den) {
    if (max_den < 2) {
        throw DomainError("appendix_check: max_den must be at least 2");
    }
    for (unsigned long q = 2; q <= max_den; ++q) {
        for (unsigned long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const Rational x(static_cast<long>(p), static_cast<long>(q));
            const bool self_symmetric = symmetry_closure_check(
                HypotheticalExceptionSet(std::set<Rational>{x}));
            if (self_symmetric != (x == kHalf)) {
                return false;
            }
        }
    }
    return true;
}

ImplicationReport pi_e_implication(const Rational& y, mpfr_prec_t prec) {
    require_unit_interval(y, "pi_e_implication");
    require_prec64(prec, "pi_e_implication");

    AlgebraicNumber k = reciprocal(minpoly_sin(y));
    const bool k_ge_one = k.compare(Rational(1)) >= 0;

    const mpfr_prec_t wp = prec + 16;
    Interval k_enc = refine(k, wp);
    while (k_enc.sign() <= 0) { // k > 0 exactly; tighten if needed
        k_enc = refine(k, 2 * k_enc.prec());
    }
    const Interval k_pi_e = mul(mul(k_enc, Interval::pi(wp)), Interval::e(wp));
    const bool excludes_one = !k_pi_e.contains(Rational(1));

    return ImplicationReport{y,        std::move(k),  k_ge_one, k_enc.rounded_to(prec),
                             k_pi_e.rounded_to(prec), excludes_one};
}

} // namespace bakergamma
