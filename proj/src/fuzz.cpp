#include "stein/fuzz.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace stein::fuzz {

namespace {

long draw(Engine& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

RingElement frac(const RingElement& x) { return x - RingElement::integer(x.ring(), x.floor()); }

}  // namespace

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("STEIN_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') return v;
    }
    return fallback;
}

std::vector<Slope> small_slopes(const RingPtr& ring) {
    std::vector<Slope> out;
    const RingElement one = RingElement::one(ring);
    auto ok = [&](const Slope& s) {
        RingElement v = RingElement::slope_value(ring, s);
        return v.sign() > 0 && v * 2 <= one;
    };
    if (ring->is_single()) {
        for (long e = -8; e <= 8; ++e) {
            Slope s{{e}};
            if (ok(s)) out.push_back(s);
        }
        // keep the three largest, smaller ones only make tiny pieces
        std::sort(out.begin(), out.end(), [&](const Slope& a, const Slope& b) {
            return RingElement::slope_value(ring, a) > RingElement::slope_value(ring, b);
        });
        if (out.size() > 3) out.resize(3);
        return out;
    }
    const std::size_t k = ring->rank();
    std::vector<long> e(k, -2);
    while (true) {
        Slope s{e};
        if (ok(s) && RingElement::slope_value(ring, s) * 16 > one) out.push_back(s);
        std::size_t i = 0;
        while (i < k && e[i] == 2) e[i++] = -2;
        if (i == k) break;
        ++e[i];
    }
    return out;
}

RingElement unit_element(const RingPtr& ring, Engine& g) {
    if (ring->is_single()) {
        std::map<long, mpz_class> t;
        const long n = draw(g, 1, 3);
        for (long i = 0; i < n; ++i) t[draw(g, -2, 3)] += draw(g, -3, 3);
        return frac(RingElement::laurent(ring, t));
    }
    mpz_class den = 1;
    for (const auto& n : ring->integers()) {
        const long e = draw(g, 0, 3);
        for (long i = 0; i < e; ++i) den *= n;
    }
    mpz_class num = draw(g, 0, 1 << 20);
    return frac(RingElement::rational(ring, mpq_class(num, den)));
}

RingElement open_unit_element(const RingPtr& ring, Engine& g) {
    while (true) {
        RingElement x = unit_element(ring, g);
        if (!x.is_zero()) return x;
    }
}

CantorPoint point(const RingPtr& ring, Engine& g) {
    RingElement v = unit_element(ring, g);
    bool plus = draw(g, 0, 1) == 1;
    if (v.is_zero()) plus = true;
    return {v, plus};
}

IntervalSet clopen(const RingPtr& ring, Engine& g) {
    const long n = draw(g, 1, 3);
    std::vector<RingElement> cuts;
    for (long i = 0; i < 2 * n; ++i) cuts.push_back(unit_element(ring, g));
    cuts.push_back(RingElement::zero(ring));
    cuts.push_back(RingElement::one(ring));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Interval> parts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (draw(g, 0, 1) == 1 && cuts[i] < cuts[i + 1]) parts.push_back({cuts[i], cuts[i + 1]});
    if (parts.empty()) parts.push_back({cuts[0], cuts.back()});
    return IntervalSet::from(parts);
}

VElement transposition(const RingPtr& ring, Engine& g) {
    std::vector<RingElement> p{open_unit_element(ring, g), open_unit_element(ring, g)};
    std::sort(p.begin(), p.end());
    const RingElement one = RingElement::one(ring);
    if (p[0] == p[1]) return VElement::identity(one);
    RingElement w = p[1] - p[0];
    if (one - p[1] < w) w = one - p[1];
    Bisection b{Affine::translation(p[1] - p[0]), IntervalSet(Interval{p[0], p[0] + w})};
    return stein::transposition(b, one);
}

VElement element(const RingPtr& ring, Engine& g) {
    const auto slopes = small_slopes(ring);
    const RingElement one = RingElement::one(ring);
    VElement x = VElement::identity(one);
    const long n = draw(g, 3, 6);
    for (long i = 0; i < n; ++i) {
        const Slope& l = slopes[static_cast<std::size_t>(draw(g, 0, static_cast<long>(slopes.size()) - 1))];
        VElement y = [&] {
            switch (draw(g, 0, 4)) {
                case 0: return sample_f(l, one);
                case 1: return sample_b(l, ring);
                case 2: return sample_g(l, ring);
                case 3: return rotation(unit_element(ring, g));
                default: return transposition(ring, g);
            }
        }();
        x = compose(draw(g, 0, 1) ? y : invert(y), x);
    }
    return x;
}

}  // namespace stein::fuzz
