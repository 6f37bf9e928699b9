/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/rational.hpp"

#include <cctype>

namespace bakergamma {

namespace {

mpq_class canonical(const mpz_class& n, const mpz_class& d) {
    if (d == 0) {
        throw DomainError("rational: zero denominator");
    }
    mpq_class q(n, d);
    q.canonicalize(); // also normalizes the sign into the numerator
    return q;
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long n, long d) : q_(canonical(mpz_class(n), mpz_class(d))) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) : q_(canonical(n, d)) {}

Rational::Rational(const mpq_class& q) : q_(q) {
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw DomainError("rational: malformed fraction '" + text + "'");
        }
        return Rational(mpz_class(text), mpz_class(1));
    }
    const std::string ns = text.substr(0, slash);
    const std::string ds = text.substr(slash + 1);
    if (!is_integer_token(ns) || !is_integer_token(ds)) {
        throw DomainError("rational: malformed fraction '" + text + "'");
    }
    return Rational(mpz_class(ns), mpz_class(ds));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) {
        throw DomainError("rational: division by zero");
    }
    return Rational(mpq_class(q_ / o.q_));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational reduce(const mpz_class& num, const mpz_class& den) {
    return Rational(num, den);
}

void require_unit_interval(const Rational& x, const char* what) {
    if (!x.in_unit_interval()) {
        throw DomainError(std::string(what) + ": argument " + x.str() +
                          " outside the open unit interval");
    }
}

} // namespace bakergamma
