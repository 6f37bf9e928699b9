/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/decimal.hpp"

#include <cassert>
#include <cstring>

namespace bakergamma {

std::string decimal_truncated(mpfr_srcptr v, unsigned digits) {
    const bool negative = mpfr_sgn(v) < 0;
    std::string frac_zero(digits, '0');
    if (mpfr_zero_p(v)) {
        return digits == 0 ? "0" : "0." + frac_zero;
    }

    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);

    // |v| * 10^digits computed exactly, then truncated to an integer.
    const mpfr_prec_t wp =
        mpfr_get_prec(v) + static_cast<mpfr_prec_t>(mpz_sizeinbase(ten_pow.get_mpz_t(), 2)) + 8;
    mpfr_t t;
    mpfr_init2(t, wp);
    mpfr_abs(t, v, MPFR_RNDN); // exact
    int inexact = mpfr_mul_z(t, t, ten_pow.get_mpz_t(), MPFR_RNDN);
    assert(inexact == 0);
    (void)inexact;
    mpz_class scaled;
    mpfr_get_z(scaled.get_mpz_t(), t, MPFR_RNDZ);
    mpfr_clear(t);

    std::string s = scaled.get_str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += "." + s.substr(s.size() - digits);
    }
    if (negative && scaled != 0) {
        out.insert(0, 1, '-');
    }
    return out;
}

std::string decimal_scientific(mpfr_srcptr v, unsigned sig, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(v)) {
        return "0";
    }
    assert(sig >= 2);
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, sig, v, rnd);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // mpfr_get_str: value = 0.digits * 10^exp10
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) {
        out += "." + digits.substr(1);
    }
    out += "e" + std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

std::string interval_mid_decimal(const Interval& iv, unsigned digits) {
    mpfr_t m;
    mpfr_init2(m, iv.prec() + 1);
    iv.mid(m);
    std::string out = decimal_truncated(m, digits);
    mpfr_clear(m);
    return out;
}

std::string interval_width_decimal(const Interval& iv, unsigned digits) {
    mpq_class g;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
    g = mpq_class(1) / mpq_class(ten_pow);
    mpq_class total = iv.width_rational().value() + g;

    mpfr_t w;
    mpfr_init2(w, 32);
    mpfr_set_q(w, total.get_mpq_t(), MPFR_RNDU);
    std::string out = decimal_scientific(w, 2, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

std::string interval_lo_decimal(const Interval& iv, unsigned sig) {
    return decimal_scientific(iv.lo(), sig, MPFR_RNDD);
}

std::string interval_hi_decimal(const Interval& iv, unsigned sig) {
    return decimal_scientific(iv.hi(), sig, MPFR_RNDU);
}

} // namespace bakergamma
