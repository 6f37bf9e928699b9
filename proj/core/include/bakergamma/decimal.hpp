/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <mpfr.h>

#include <string>

#include "bakergamma/interval.hpp"

namespace bakergamma {

/// Fixed-point rendering of v with exactly `digits` digits after the
/// decimal point, truncated toward zero. The conversion is exact before
/// truncation, so the output is deterministic and never rounds up.
std::string decimal_truncated(mpfr_srcptr v, unsigned digits);

/// Scientific rendering "d.dd...e<exp>" with `sig` significant digits and
/// a directed rounding, so printed enclosure endpoints still enclose.
std::string decimal_scientific(mpfr_srcptr v, unsigned sig, mpfr_rnd_t rnd);

/// Midpoint of an enclosure, truncated at `digits` decimal places.
std::string interval_mid_decimal(const Interval& iv, unsigned digits);

/// Upper bound on |true value - printed midpoint|: interval width plus the
/// 10^-digits truncation granularity, rounded up to two significant digits.
std::string interval_width_decimal(const Interval& iv, unsigned digits);

/// Enclosure endpoints as decimal strings, outward-rounded at `sig`
/// significant digits.
std::string interval_lo_decimal(const Interval& iv, unsigned sig);
std::string interval_hi_decimal(const Interval& iv, unsigned sig);

} // namespace bakergamma
