/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/polynomial.hpp"

#include <cassert>
#include <map>
#include <mutex>

#include "bakergamma/errors.hpp"

namespace bakergamma {

namespace {

void strip(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
}

const mpz_class kZero = 0;

} // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    strip(c_);
}

IntPolynomial IntPolynomial::from_longs(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::xn_minus_one(unsigned long n) {
    std::vector<mpz_class> c(n + 1, mpz_class(0));
    c[0] = -1;
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::leading() const {
    return c_.empty() ? kZero : c_.back();
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    const mpz_class g = content();
    std::vector<mpz_class> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(c[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::canonical() const {
    IntPolynomial p = primitive_part();
    if (!p.is_zero() && p.leading() < 0) {
        p = neg(p);
    }
    return p;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<mpz_class> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        c[i - 1] = c_[i] * static_cast<unsigned long>(i);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::scale_arg_2() const {
    std::vector<mpz_class> c(c_.size());
    mpz_class pow2 = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * pow2;
        pow2 <<= 1;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed() const {
    if (is_zero()) return *this;
    if (c_.front() == 0) {
        throw DomainError("polynomial: reversal needs a nonzero constant term");
    }
    std::vector<mpz_class> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
}

mpq_class IntPolynomial::eval(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * t + mpq_class(*it);
    }
    return acc;
}

int IntPolynomial::sign_at(const mpq_class& t) const {
    return sgn(eval(t));
}

Interval IntPolynomial::eval_interval(const Interval& x) const {
    Interval acc = Interval::zero(x.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = add_z(mul(acc, x), *it);
    }
    return acc;
}

bool IntPolynomial::operator<(const IntPolynomial& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;) {
        const int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
        else if (c_[i] < 0) out += "-";
        const mpz_class a = ::abs(c_[i]);
        if (a != 1 || i == 0) out += a.get_str();
        if (i >= 1) out += a == 1 ? "x" : "*x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial neg(const IntPolynomial& a) {
    std::vector<mpz_class> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) {
        throw DomainError("polynomial: division by zero polynomial");
    }
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) {
        throw DomainError("polynomial: inexact division");
    }
    std::vector<mpz_class> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1, mpz_class(0));
    const long db = b.degree();
    for (long i = a.degree(); i >= db; --i) {
        const mpz_class& top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        if (r != 0) {
            throw DomainError("polynomial: inexact division");
        }
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
        }
    }
    for (const auto& v : rem) {
        if (v != 0) {
            throw DomainError("polynomial: inexact division");
        }
    }
    return IntPolynomial(std::move(quot));
}

namespace {

// Rational-coefficient remainder of a by b, returned as a primitive integer
// polynomial scaled by a positive rational (signs of values preserved).
IntPolynomial qrem_primitive(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpq_class> r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mpq_class(a[i]);
    const long db = b.degree();
    const mpq_class blead(b.leading());
    long dr = a.degree();
    while (dr >= db) {
        mpq_class coef = r[static_cast<std::size_t>(dr)] / blead;
        for (long j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(dr - db + j)] -= coef * mpq_class(b[static_cast<std::size_t>(j)]);
        }
        r[static_cast<std::size_t>(dr)] = 0;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    if (dr < 0) return IntPolynomial();
    // common positive denominator, then primitive part
    mpz_class lcm = 1;
    for (long i = 0; i <= dr; ++i) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                r[static_cast<std::size_t>(i)].get_den().get_mpz_t());
    }
    std::vector<mpz_class> c(static_cast<std::size_t>(dr) + 1);
    for (long i = 0; i <= dr; ++i) {
        mpq_class v = r[static_cast<std::size_t>(i)] * mpq_class(lcm);
        assert(v.get_den() == 1);
        c[static_cast<std::size_t>(i)] = v.get_num();
    }
    return IntPolynomial(std::move(c)).primitive_part();
}

long sign_variations(const std::vector<IntPolynomial>& chain, const mpq_class& t) {
    long count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        const int s = p.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    if (p.is_zero()) {
        throw DomainError("sturm: zero polynomial");
    }
    std::vector<IntPolynomial> chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative().primitive_part());
    while (chain.back().degree() >= 1) {
        IntPolynomial r = qrem_primitive(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) {
            throw DomainError("sturm: polynomial has a repeated root");
        }
        chain.push_back(neg(r));
    }
    return chain;
}

long count_roots(const std::vector<IntPolynomial>& chain, const Rational& a, const Rational& b) {
    if (a > b) {
        throw DomainError("sturm: inverted interval");
    }
    if (chain.front().sign_at(a.value()) == 0 || chain.front().sign_at(b.value()) == 0) {
        throw DomainError("sturm: endpoint is a root");
    }
    return sign_variations(chain, a.value()) - sign_variations(chain, b.value());
}

long count_roots(const IntPolynomial& p, const Rational& a, const Rational& b) {
    return count_roots(sturm_chain(p), a, b);
}

IntPolynomial cyclotomic(unsigned long n) {
    if (n == 0) {
        throw DomainError("cyclotomic: index must be positive");
    }
    static std::map<unsigned long, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto compute = [](auto&& self, unsigned long m) -> const IntPolynomial& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        IntPolynomial p = IntPolynomial::xn_minus_one(m);
        for (unsigned long d = 1; d < m; ++d) {
            if (m % d == 0) {
                p = divexact(p, self(self, d));
            }
        }
        return cache.emplace(m, std::move(p)).first->second;
    };
    return compute(compute, n);
}

IntPolynomial two_cos_minpoly(unsigned long m) {
    if (m == 0) {
        throw DomainError("two_cos_minpoly: index must be positive");
    }
    if (m == 1) return IntPolynomial::from_longs({-2, 1}); // 2cos(0) = 2
    if (m == 2) return IntPolynomial::from_longs({2, 1});  // 2cos(pi) = -2
    const IntPolynomial phi = cyclotomic(m);
    const long n = phi.degree();
    assert(n % 2 == 0);
    const long half = n / 2;
    for (long i = 0; i <= n; ++i) {
        // the fold below needs the palindrome a_i = a_{n-i}
        assert(phi[static_cast<std::size_t>(i)] == phi[static_cast<std::size_t>(n - i)]);
    }
    // phi(x)/x^half = a_half + sum_{j>=1} a_{half+j} (x^j + x^-j) and
    // x^j + x^-j = V_j(y) with y = x + 1/x: V_0 = 2, V_1 = y,
    // V_{j+1} = y V_j - V_{j-1}. The fold is irreducible for every m.
    std::vector<mpz_class> psi(static_cast<std::size_t>(half) + 1, mpz_class(0));
    psi[0] = phi[static_cast<std::size_t>(half)];
    std::vector<mpz_class> v_prev{2};    // V_0
    std::vector<mpz_class> v_cur{0, 1};  // V_1
    for (long j = 1; j <= half; ++j) {
        const mpz_class& aj = phi[static_cast<std::size_t>(half + j)];
        if (aj != 0) {
            for (std::size_t i = 0; i < v_cur.size(); ++i) {
                psi[i] += aj * v_cur[i];
            }
        }
        if (j < half) {
            // V_{j+1} = y*V_j - V_{j-1}
            std::vector<mpz_class> next(v_cur.size() + 1, mpz_class(0));
            for (std::size_t i = 0; i < v_cur.size(); ++i) next[i + 1] = v_cur[i];
            for (std::size_t i = 0; i < v_prev.size(); ++i) next[i] -= v_prev[i];
            v_prev = std::move(v_cur);
            v_cur = std::move(next);
        }
    }
    return IntPolynomial(std::move(psi));
}

IntPolynomial cos_minpoly(unsigned long m) {
    return two_cos_minpoly(m).scale_arg_2().canonical();
}

} // namespace bakergamma
