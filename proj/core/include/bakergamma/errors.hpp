/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <stdexcept>
#include <string>

namespace bakergamma {

/// Argument outside the operation's mathematical domain (zero denominator,
/// log of an interval touching zero, x outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal precision-raising ladder ran out before the requested
/// enclosure width could be certified.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes produced disjoint enclosures of the
/// same quantity. Signals an implementation bug, never a data condition.
class DisagreementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bakergamma
