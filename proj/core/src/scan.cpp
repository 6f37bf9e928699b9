/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/scan.hpp"

#include <ostream>
#include <thread>

#include "bakergamma/decimal.hpp"
#include "bakergamma/errors.hpp"

namespace bakergamma {

std::vector<Rational> scan_grid(const Rational& from, const Rational& to, unsigned long steps) {
    if (!from.in_unit_interval() || !to.in_unit_interval() || !(from < to)) {
        throw DomainError("scan: need 0 < from < to < 1");
    }
    if (steps < 2) {
        throw DomainError("scan: need at least 2 steps");
    }
    const Rational step = (to - from) / Rational(static_cast<long>(steps));
    std::vector<Rational> grid;
    grid.reserve(steps + 1);
    for (unsigned long k = 0; k <= steps; ++k) {
        grid.push_back(from + step * Rational(static_cast<long>(k)));
    }
    return grid;
}

std::vector<Interval> scan_values(const ScanRequest& req) {
    const auto grid = scan_grid(req.from, req.to, req.steps);
    std::vector<Interval> values(grid.size(), Interval::zero(8));

    unsigned threads = req.threads;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    // Parallel evaluation needs MPFR's thread-local caches.
    if (!mpfr_buildopt_tls_p()) {
        threads = 1;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));

    auto worker = [&](unsigned tid, unsigned stride) {
        for (std::size_t i = tid; i < grid.size(); i += stride) {
            values[i] = f_eval(grid[i], req.prec, req.mode);
        }
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&worker](unsigned tid, unsigned stride) {
                worker(tid, stride);
                mpfr_free_cache(); // release this thread's constant caches
            }, t, threads);
        }
        for (auto& th : pool) th.join();
    }
    return values;
}

std::vector<ScanRow> scan_rows(const ScanRequest& req) {
    const auto grid = scan_grid(req.from, req.to, req.steps);
    const auto values = scan_values(req);
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rows.push_back(ScanRow{grid[i], interval_mid_decimal(values[i], req.digits),
                               interval_width_decimal(values[i], req.digits)});
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "x_num,x_den,f_mid,f_width\n";
    for (const auto& row : rows) {
        out << row.x.num().get_str() << ',' << row.x.den().get_str() << ',' << row.f_mid << ','
            << row.f_width << '\n';
    }
}

} // namespace bakergamma
