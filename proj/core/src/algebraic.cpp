/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#include "bakergamma/algebraic.hpp"

#include <cassert>
#include <map>
#include <mutex>

#include "bakergamma/errors.hpp"

namespace bakergamma {

namespace {

constexpr mpfr_prec_t kMaxIsolatorPrec = 1 << 20;

Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) * Rational(1, 2);
}

// Root bracket with cached endpoint sign; P(lo) and P(hi) have opposite
// nonzero signs throughout.
struct Bracket {
    Rational lo, hi;
    int sign_lo;

    void bisect(const IntPolynomial& p) {
        const Rational m = midpoint(lo, hi);
        const int s = p.sign_at(m.value());
        // an irreducible polynomial of degree >= 2 has no rational roots
        assert(s != 0);
        if (s == sign_lo) {
            lo = m;
        } else {
            hi = m;
        }
    }

    Rational width() const { return hi - lo; }
};

} // namespace

AlgebraicNumber::AlgebraicNumber(IntPolynomial minpoly, Rational iso_lo, Rational iso_hi)
    : poly_(std::move(minpoly)), lo_(std::move(iso_lo)), hi_(std::move(iso_hi)) {
    if (poly_.is_zero() || poly_.degree() < 1) {
        throw DomainError("algebraic: minimal polynomial must be nonconstant");
    }
    if (poly_ != poly_.canonical()) {
        throw DomainError("algebraic: minimal polynomial must be primitive with positive lead");
    }
    if (poly_.degree() == 1) {
        const Rational r = Rational(-poly_[0], poly_[1]);
        lo_ = r;
        hi_ = r;
        return;
    }
    if (!(lo_ < hi_)) {
        throw DomainError("algebraic: empty isolating interval");
    }
    const int sa = poly_.sign_at(lo_.value());
    const int sb = poly_.sign_at(hi_.value());
    if (sa == 0 || sb == 0 || sa == sb) {
        throw DomainError("algebraic: isolator endpoints must straddle the root");
    }
    auto chain = std::make_shared<std::vector<IntPolynomial>>(sturm_chain(poly_));
    if (count_roots(*chain, lo_, hi_) != 1) {
        throw DomainError("algebraic: isolator does not contain exactly one root");
    }
    chain_ = std::move(chain);
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    return AlgebraicNumber(IntPolynomial({mpz_class(-r.num()), mpz_class(r.den())}), r, r);
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) {
        throw DomainError("algebraic: not a rational number");
    }
    return lo_;
}

int AlgebraicNumber::compare(const Rational& r) const {
    if (is_rational()) {
        if (lo_ < r) return -1;
        if (lo_ > r) return 1;
        return 0;
    }
    Bracket b{lo_, hi_, poly_.sign_at(lo_.value())};
    // the root is in the open bracket; shrink until r falls outside
    while (r > b.lo && r < b.hi) {
        b.bisect(poly_);
    }
    if (r <= b.lo) return 1;
    return -1;
}

const std::vector<IntPolynomial>& AlgebraicNumber::sturm() const {
    static const std::vector<IntPolynomial> empty;
    return chain_ ? *chain_ : empty;
}

Interval refine(const AlgebraicNumber& a, mpfr_prec_t prec) {
    if (a.is_rational()) {
        const Rational r = a.rational_value();
        const long num_bits = static_cast<long>(mpz_sizeinbase(r.num().get_mpz_t(), 2));
        const long den_bits = static_cast<long>(mpz_sizeinbase(r.den().get_mpz_t(), 2));
        const mpfr_prec_t wp = prec + 16 + std::max(0L, num_bits - den_bits + 1);
        return Interval::from_rational(r, wp);
    }

    const IntPolynomial& p = a.minpoly();
    const IntPolynomial dp = p.derivative();
    Bracket b{a.iso_lo(), a.iso_hi(), p.sign_at(a.iso_lo().value())};

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(prec + 2));
    const mpq_class target = mpq_class(1) / mpq_class(scale); // 2^(-prec-2)

    mpfr_prec_t wp = prec + 64;
    int iterations = 0;
    while (b.width().value() > target) {
        if (++iterations > 20000 || wp > kMaxIsolatorPrec) {
            throw PrecisionExhausted("refine: root refinement did not converge");
        }
        Interval x = Interval::from_endpoints(b.lo, b.hi, wp);
        const Interval deriv = dp.eval_interval(x);
        if (deriv.contains_zero()) {
            b.bisect(p);
            continue;
        }
        const Rational m = x.mid_rational();
        const Interval pm = p.eval_interval(Interval::from_rational(m, wp));
        const Interval newton = sub(Interval::from_rational(m, wp), div(pm, deriv));
        const auto clipped = intersect(newton, x);
        if (!clipped) {
            // cannot happen for a correct enclosure; retry with more bits
            wp *= 2;
            continue;
        }
        Rational nlo = clipped->lo_rational();
        Rational nhi = clipped->hi_rational();
        if (nlo < b.lo) nlo = b.lo;
        if (nhi > b.hi) nhi = b.hi;
        const Rational new_width = nhi - nlo;
        if (new_width * Rational(5, 3) > b.width()) {
            // Newton stalled; bisect exactly and raise the working precision
            b.bisect(p);
            wp *= 2;
            continue;
        }
        // endpoints of the clipped interval are never roots (dyadic/rational
        // points, irreducible polynomial of degree >= 2)
        b = Bracket{nlo, nhi, p.sign_at(nlo.value())};
    }
    return Interval::from_endpoints(b.lo, b.hi, wp);
}

bool alg_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.minpoly() != b.minpoly()) {
        return false;
    }
    if (a.is_rational()) {
        return true; // same degree-1 polynomial pins the same value
    }
    Bracket ba{a.iso_lo(), a.iso_hi(), a.minpoly().sign_at(a.iso_lo().value())};
    Bracket bb{b.iso_lo(), b.iso_hi(), b.minpoly().sign_at(b.iso_lo().value())};
    const auto& chain = a.sturm();
    for (;;) {
        if (ba.hi < bb.lo || bb.hi < ba.lo) {
            return false;
        }
        const Rational ulo = std::min(ba.lo, bb.lo);
        const Rational uhi = std::max(ba.hi, bb.hi);
        if (count_roots(chain, ulo, uhi) == 1) {
            return true;
        }
        ba.bisect(a.minpoly());
        bb.bisect(b.minpoly());
    }
}

int alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (alg_equal(a, b)) {
        return 0;
    }
    if (a.is_rational()) {
        return -b.compare(a.rational_value());
    }
    if (b.is_rational()) {
        return a.compare(b.rational_value());
    }
    Bracket ba{a.iso_lo(), a.iso_hi(), a.minpoly().sign_at(a.iso_lo().value())};
    Bracket bb{b.iso_lo(), b.iso_hi(), b.minpoly().sign_at(b.iso_lo().value())};
    // distinct reals: brackets eventually separate
    while (!(ba.hi < bb.lo) && !(bb.hi < ba.lo)) {
        ba.bisect(a.minpoly());
        bb.bisect(b.minpoly());
    }
    return ba.hi < bb.lo ? -1 : 1;
}

AlgebraicNumber reciprocal(const AlgebraicNumber& a) {
    if (a.is_rational()) {
        const Rational r = a.rational_value();
        if (r.is_zero()) {
            throw DomainError("reciprocal: zero has no inverse");
        }
        return AlgebraicNumber::from_rational(Rational(1) / r);
    }
    const IntPolynomial rev = a.minpoly().reversed().canonical();
    Bracket b{a.iso_lo(), a.iso_hi(), a.minpoly().sign_at(a.iso_lo().value())};
    // shrink until the bracket is sign-definite, so it inverts monotonically
    while (b.lo.sign() <= 0 && b.hi.sign() >= 0) {
        b.bisect(a.minpoly());
    }
    Rational inv_lo = Rational(1) / b.hi;
    Rational inv_hi = Rational(1) / b.lo;
    if (inv_lo > inv_hi) std::swap(inv_lo, inv_hi);
    return AlgebraicNumber(rev, inv_lo, inv_hi);
}

AlgebraicNumber minpoly_sin(const Rational& x) {
    require_unit_interval(x, "minpoly_sin");

    static std::map<Rational, AlgebraicNumber> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
    }

    const mpz_class p = x.num();
    const mpz_class q = x.den();
    mpz_class k = q - 2 * p;
    AlgebraicNumber result = [&]() {
        if (k == 0) {
            return AlgebraicNumber::from_rational(Rational(1)); // sin(pi/2)
        }
        mpz_class k_abs = ::abs(k);
        const mpz_class four_q = 4 * q;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), k_abs.get_mpz_t(), four_q.get_mpz_t());
        const mpz_class m_z = four_q / g;
        if (!m_z.fits_ulong_p()) {
            throw DomainError("minpoly_sin: denominator too large for the cyclotomic fold");
        }
        const unsigned long m = m_z.get_ui();

        const IntPolynomial poly = cos_minpoly(m);
        if (poly.degree() == 1) {
            return AlgebraicNumber::from_rational(Rational(-poly[0], poly[1]));
        }

        const auto chain = sturm_chain(poly);
        for (mpfr_prec_t wp = 64; wp <= kMaxIsolatorPrec; wp *= 2) {
            const Interval enc = sin_pi(x, wp);
            const Rational lo = enc.lo_rational();
            const Rational hi = enc.hi_rational();
            if (poly.sign_at(lo.value()) == 0 || poly.sign_at(hi.value()) == 0) {
                continue; // endpoint collision; a tighter enclosure resolves it
            }
            if (count_roots(chain, lo, hi) == 1) {
                return AlgebraicNumber(poly, lo, hi);
            }
        }
        throw PrecisionExhausted("minpoly_sin: could not isolate the sine value");
    }();

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(x, std::move(result)).first->second;
}

} // namespace bakergamma
