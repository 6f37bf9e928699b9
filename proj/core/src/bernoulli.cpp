/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bernoulli.hpp"

#include <mutex>
#include <vector>

namespace bakergamma::detail {

namespace {

// Tangent numbers T_1..T_n (1, 2, 16, 272, ...) by the in-place Seidel
// triangle; integer arithmetic only.
std::vector<mpz_class> tangent_numbers(unsigned long n) {
    std::vector<mpz_class> t(n + 1);
    t[1] = 1;
    for (unsigned long k = 2; k <= n; ++k) {
        t[k] = t[k - 1] * (k - 1);
    }
    for (unsigned long k = 2; k <= n; ++k) {
        for (unsigned long j = k; j <= n; ++j) {
            t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
        }
    }
    return t;
}

std::vector<mpq_class> g_cache; // g_cache[k-1] = B_{2k}
std::mutex g_mu;

void grow(unsigned long upto) {
    const auto t = tangent_numbers(upto);
    g_cache.resize(upto);
    for (unsigned long k = 1; k <= upto; ++k) {
        // tan x = sum T_k x^(2k-1)/(2k-1)! gives
        // B_{2k} = (-1)^(k-1) * 2k * T_k / (4^k (4^k - 1))
        mpz_class four_k;
        mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
        mpq_class b(2 * k * t[k], four_k * (four_k - 1));
        b.canonicalize();
        if (k % 2 == 0) b = -b;
        g_cache[k - 1] = b;
    }
}

} // namespace

mpq_class bernoulli_2k(unsigned long k) {
    std::lock_guard<std::mutex> lock(g_mu);
    if (k > g_cache.size()) {
        grow(std::max<unsigned long>(2 * g_cache.size(), k + 16));
    }
    return g_cache[k - 1];
}

} // namespace bakergamma::detail
