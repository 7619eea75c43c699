#pragma once

// Independent checks used by several test files: high precision float
// evaluation of ring elements and small deterministic generators.

#include "stein/ring.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace oracle {

inline constexpr unsigned kPrec = 1024;

// Root of f inside (lo, hi) by float bisection, independent of RingSpec.
inline mpf_class float_root(const stein::ZPoly& f, const mpq_class& lo, const mpq_class& hi) {
    auto ev = [&](const mpf_class& x) {
        mpf_class acc(0, kPrec);
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + mpf_class(*it, kPrec);
        return acc;
    };
    mpf_class a(lo, kPrec), b(hi, kPrec);
    const int sa = sgn(ev(a));
    for (unsigned i = 0; i < kPrec - 16; ++i) {
        mpf_class m(0, kPrec);
        m = (a + b) / 2;
        if (sgn(ev(m)) == sa) a = m;
        else b = m;
    }
    return a;
}

inline mpf_class value(const stein::RingElement& x) {
    const auto& r = x.ring();
    if (!r->is_single()) return mpf_class(x.rational_value(), kPrec);
    mpf_class l = float_root(r->minpoly(), r->window_lo(), r->window_hi());
    mpf_class acc(0, kPrec);
    for (long j = static_cast<long>(x.coeffs().size()) - 1; j >= 0; --j)
        acc = acc * l + mpf_class(x.coeffs()[static_cast<std::size_t>(j)], kPrec);
    mpf_class p(1, kPrec);
    long s = x.shift();
    for (long k = 0; k < (s < 0 ? -s : s); ++k) p *= l;
    return s < 0 ? mpf_class(acc / p) : mpf_class(acc * p);
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed0000ull + salt); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

// Random Laurent polynomial with small coefficients.
inline std::map<long, mpz_class> laurent(std::mt19937_64& g, long lo = -4, long hi = 6, long c = 5) {
    std::map<long, mpz_class> t;
    const long n = uniform(g, 0, 5);
    for (long i = 0; i < n; ++i) t[uniform(g, lo, hi)] += uniform(g, -c, c);
    return t;
}

// Evaluate a Laurent polynomial at the float root.
inline mpf_class laurent_value(const std::map<long, mpz_class>& t, const stein::RingPtr& r) {
    mpf_class l = float_root(r->minpoly(), r->window_lo(), r->window_hi());
    mpf_class acc(0, kPrec);
    for (const auto& [e, c] : t) {
        mpf_class p(1, kPrec);
        for (long k = 0; k < (e < 0 ? -e : e); ++k) p *= l;
        if (e < 0) p = 1 / p;
        acc += p * mpf_class(c, kPrec);
    }
    return acc;
}

}  // namespace oracle
