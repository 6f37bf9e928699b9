/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bakergamma/gamma_eval.hpp"
#include "bakergamma/rational.hpp"

namespace bakergamma {

/// One CSV row of a Figure-style scan of f. f_mid is the enclosure midpoint
/// truncated (never rounded up) at the requested number of decimal places;
/// f_width bounds |true value - f_mid| including the truncation granularity.
struct ScanRow {
    Rational x;
    std::string f_mid;
    std::string f_width;
};

struct ScanRequest {
    Rational from;
    Rational to;
    unsigned long steps = 0; // N >= 2; the scan emits N+1 rows
    unsigned digits = 40;    // decimal places of f_mid
    mpfr_prec_t prec = kDefaultPrecBits;
    FEvalMode mode = FEvalMode::Fast;
    unsigned threads = 0; // 0 = automatic; >1 only used when MPFR is TLS-safe
};

/// Exact rational grid from + k*(to-from)/steps, k = 0..steps, ascending.
/// The grid is never snapped to binary floats, so x and 1-x pair up exactly
/// on symmetric requests. Requires 0 < from < to < 1 and steps >= 2.
std::vector<Rational> scan_grid(const Rational& from, const Rational& to, unsigned long steps);

/// Enclosures of f over the grid, in grid order. Rows are computed in
/// parallel when permitted and always emitted in input order.
std::vector<Interval> scan_values(const ScanRequest& req);

std::vector<ScanRow> scan_rows(const ScanRequest& req);

/// Header "x_num,x_den,f_mid,f_width" plus one line per row, UTF-8 with
/// LF line endings; byte-deterministic for identical requests.
void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);

} // namespace bakergamma
