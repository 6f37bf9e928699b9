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
#include <set>
#include <string>
#include <vector>

#include "bakergamma/algebraic.hpp"
#include "bakergamma/interval.hpp"
#include "bakergamma/rational.hpp"

namespace bakergamma {

/// A hypothetical set of rational arguments in (0,1) at which
/// f(x) = log Gamma(x) + log Gamma(1-x) is assumed to take algebraic
/// values. The analyzers below decide whether such a set is consistent
/// with the two-exception bound and the x <-> 1-x symmetry of f.
class HypotheticalExceptionSet {
public:
    HypotheticalExceptionSet() = default;
    explicit HypotheticalExceptionSet(std::set<Rational> members);

    /// Parses a comma-separated list of fractions; the empty string is the
    /// empty set. Throws DomainError on malformed or out-of-range entries.
    static HypotheticalExceptionSet parse(const std::string& csv);

    const std::set<Rational>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(const Rational& x) const { return members_.count(x) > 0; }

private:
    std::set<Rational> members_;
};

/// At most one member in (0, 1/2] and at most one in [1/2, 1). The point
/// 1/2 belongs to both closed half-intervals, so {1/2, x} with x < 1/2
/// already violates the left-half bound.
bool halfinterval_bound_check(const HypotheticalExceptionSet& s);

/// Closedness under x -> 1-x: f(1-x) = f(x) forces exceptions to come in
/// symmetric pairs unless x = 1/2.
bool symmetry_closure_check(const HypotheticalExceptionSet& s);

enum class TheoremCase { I, II, III };
enum class LogPiStatus { Transcendental, Algebraic, Undetermined };
enum class Violation { None, MoreThanTwo, HalfIntervalBound, SymmetryClosure };

/// Structured outcome of the exception-set case analysis. A consistent set
/// is exactly one of: empty (case I), {1/2} (case II), or a symmetric pair
/// {x, 1-x} with x != 1/2 (case III); cases I and III force log(pi)
/// transcendental, case II forces it algebraic.
struct ExceptionVerdict {
    bool consistent = false;
    std::optional<TheoremCase> theorem_case;
    LogPiStatus log_pi_status = LogPiStatus::Undetermined;
    Violation violation = Violation::None;

    /// Axioms the verdict rests on, for report provenance.
    static std::vector<std::string> uses() { return {"Baker", "Theorem1", "Theorem2"}; }
};

ExceptionVerdict exception_set_analyze(const HypotheticalExceptionSet& s);

/// log(pi) is algebraic iff the exception set is exactly {1/2}; equivalent
/// to case II, kept as a separate operation so the equivalence itself is
/// testable. Throws DomainError on an inconsistent set.
bool criteria_statement(const HypotheticalExceptionSet& s);

/// Exhaustively verifies, over all reduced p/q with q <= max_den, that a
/// singleton exception set {x} passes the symmetry closure only for
/// x = 1/2. Requires max_den >= 2.
bool appendix_check(unsigned long max_den);

/// Certificate behind the conditional: if f(y) is algebraic for some
/// rational y in (0,1), then pi*e is transcendental.
struct ImplicationReport {
    Rational y;
    AlgebraicNumber k;       // k(y) = 1/sin(pi y), an algebraic number
    bool k_ge_one = false;   // k(y) >= 1, decided exactly
    Interval k_enclosure;    // numeric support
    Interval k_pi_e;         // enclosure of k(y) * pi * e
    bool excludes_one = false;

    std::string premise() const { return "f(" + y.str() + ") is algebraic"; }
    static std::string conclusion() { return "pi*e is transcendental"; }
    static std::vector<std::string> uses() { return {"HL"}; }
};

ImplicationReport pi_e_implication(const Rational& y, mpfr_prec_t prec);

} // namespace bakergamma
