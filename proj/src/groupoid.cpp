#include "stein/groupoid.hpp"

#include "stein/error.hpp"

#include <algorithm>

namespace stein {

namespace {

Interval unit_interval(const RingPtr& r) { return {RingElement::zero(r), RingElement::one(r)}; }

RingElement slope_in_unit(const RingPtr& ring, const Slope& lambda) {
    RingElement l = RingElement::slope_value(ring, lambda);
    if (l.sign() <= 0 || l >= RingElement::one(ring))
        throw Error(ErrorCode::OutOfRange, "lambda = " + l.str() + " must lie in (0, 1)");
    return l;
}

// Smallest positive power base: a slope value in (0, 1).
RingElement small_unit(const RingPtr& r) {
    RingElement v = RingElement::generator(r, 0);
    if (v.sign() < 0) v = v * v;
    if (v > RingElement::one(r)) v = v.inverse();
    return v;
}

struct Bound {
    RingElement v;
    bool strict;
};

Bound tighter_max(Bound a, Bound b) {
    auto c = a.v <=> b.v;
    if (c == 0) return {a.v, a.strict || b.strict};
    return c > 0 ? a : b;
}

Bound tighter_min(Bound a, Bound b) {
    auto c = a.v <=> b.v;
    if (c == 0) return {a.v, a.strict || b.strict};
    return c < 0 ? a : b;
}

bool in_unit(const CantorPoint& p) { return unit_interval(p.value.ring()).contains(p); }

std::string interval_text(const RingElement& a, const RingElement& b) { return Interval{a, b}.str(); }

}  // namespace

IntervalSet apply(const Bisection& b, const RingElement& ell) {
    IntervalSet r = b.range();
    if (!IntervalSet(Interval{RingElement::zero(ell.ring()), ell}).contains(r))
        throw Error(ErrorCode::RangeEscapes, "range " + r.str() + " leaves (0, " + ell.str() + "]");
    return r;
}

std::vector<Bisection> to_bisections(const VElement& g) {
    std::vector<Bisection> out;
    for (const auto& p : g.map().pieces()) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Bisection& b) { return b.g == p.map; });
        if (it == out.end()) out.push_back({p.map, IntervalSet(p.domain)});
        else it->source = it->source.unite(IntervalSet(p.domain));
    }
    return out;
}

VElement from_bisections(const std::vector<Bisection>& bs, const RingElement& ell) {
    std::vector<Piece> pieces;
    for (const auto& b : bs)
        for (const auto& i : b.source.parts()) pieces.push_back({i, b.g});
    try {
        return VElement::from_map(PartialMap(std::move(pieces)), ell);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotAPartition, e.what());
    }
}

std::optional<RingElement> fixed_point(const Affine& g, const RingElement& ell) {
    if (g.is_identity()) throw Error(ErrorCode::IdentityElement, "(0, 1) fixes everything");
    if (g.is_translation()) return std::nullopt;
    const RingElement& mu = g.mu_value();
    auto t = (g.c() * mu).divide(RingElement::one(mu.ring()) - mu);
    if (!t || t->sign() < 0 || *t > ell) return std::nullopt;
    return t;
}

PurelyInfiniteWitness purely_infinite_witness(const IntervalSet& A, const Slope& lambda) {
    if (A.empty()) throw Error(ErrorCode::EmptySet, "A is empty");
    const RingPtr& r = A.parts().front().lo.ring();
    RingElement l = RingElement::slope_value(r, lambda);
    if (l.sign() <= 0 || l * 2 > RingElement::one(r))
        throw Error(ErrorCode::LambdaTooLarge, "need 0 < lambda <= 1/2, got " + l.str());
    const RingElement k = l.inverse() - RingElement::one(r);
    PurelyInfiniteWitness w;
    for (const auto& i : A.parts()) {
        w.U.push_back({Affine(i.lo * k, lambda), IntervalSet(i)});
        w.V.push_back({Affine(i.hi * k, lambda), IntervalSet(i)});
    }
    return w;
}

RingElement element_between(const RingElement& lo, const RingElement& hi) {
    if (!(lo < hi)) throw Error(ErrorCode::OutOfRange, "empty range " + interval_text(lo, hi));
    const RingPtr& r = lo.ring();
    const RingElement s = small_unit(r);
    RingElement h = s;
    while (!(h < hi - lo)) h *= s;
    // m*h > lo and m*h <= lo + h < hi
    const mpz_class m = (*lo.divide(h)).floor() + 1;
    return h * RingElement::integer(r, m);
}

RingElement separate(const CantorPoint& x0, const CantorPoint& y0, const RingElement& lambda) {
    if (x0 == y0) throw Error(ErrorCode::EqualPoints, "points coincide: " + x0.str());
    if (!in_unit(x0) || !in_unit(y0)) throw Error(ErrorCode::OutOfRange, "points must lie in [0+, 1-]");
    const RingPtr& r = lambda.ring();
    if (lambda.sign() <= 0 || lambda >= RingElement::one(r))
        throw Error(ErrorCode::OutOfRange, "lambda must lie in (0, 1)");
    const CantorPoint& x = x0 < y0 ? x0 : y0;
    const CantorPoint& y = x0 < y0 ? y0 : x0;
    const RingElement& a = x.value;
    const RingElement& b = y.value;
    const RingElement one = RingElement::one(r);
    // (a - c)^s in (0, lambda] and (b - c)^t in (lambda, 1]
    Bound L = tighter_max({a - lambda, x.plus}, {b - one, y.plus});
    Bound U = tighter_min({a, !x.plus}, {b - lambda, !y.plus});
    auto cmp = L.v <=> U.v;
    if (cmp > 0 || (cmp == 0 && (L.strict || U.strict)))
        throw Error(ErrorCode::IllDefined, "no separating translation for " + x.str() + ", " + y.str());
    if (!U.strict) return U.v;
    if (!L.strict) return L.v;
    return element_between(L.v, U.v);
}

bool separation_holds(const CantorPoint& x0, const CantorPoint& y0, const RingElement& lambda,
                      const RingElement& c) {
    const CantorPoint& x = x0 < y0 ? x0 : y0;
    const CantorPoint& y = x0 < y0 ? y0 : x0;
    const RingPtr& r = lambda.ring();
    Interval low{RingElement::zero(r), lambda}, high{lambda, RingElement::one(r)};
    return low.contains(CantorPoint{x.value - c, x.plus}) && high.contains(CantorPoint{y.value - c, y.plus});
}

Affine orbit_witness(const CantorPoint& x, const Interval& target) {
    if (target.empty()) throw Error(ErrorCode::EmptySet, "empty target");
    const RingPtr& r = x.value.ring();
    if (target.contains(x)) return Affine::identity(r);
    RingElement m = [&] {
        auto half = (target.lo + target.hi).divide(RingElement::integer(r, 2));
        return half ? *half : element_between(target.lo, target.hi);
    }();
    return Affine::translation(m - x.value);
}

VElement transposition(const Bisection& b, const RingElement& ell) {
    const IntervalSet s = b.source, rg = b.range();
    if (!s.disjoint(rg)) throw Error(ErrorCode::OverlappingSourceRange, "source meets range");
    PartialMap m = b.as_map().disjoint_union(b.inverse().as_map());
    IntervalSet rest = s.unite(rg).complement(ell);
    if (!rest.empty()) m = m.disjoint_union(PartialMap::identity_on(rest));
    return VElement::from_map(m, ell);
}

VElement three_cycle(const Bisection& b1, const Bisection& b2, const RingElement& ell) {
    const IntervalSet s1 = b1.source, s2 = b2.source, r2 = b2.range();
    if (!(b1.range() == s2)) throw Error(ErrorCode::OverlappingSourceRange, "r(B1) must equal s(B2)");
    if (!s1.disjoint(s2) || !s1.disjoint(r2) || !s2.disjoint(r2))
        throw Error(ErrorCode::OverlappingSourceRange, "cylinders of the 3-cycle overlap");
    PartialMap back = b2.as_map().compose(b1.as_map()).inverse();
    PartialMap m = b1.as_map().disjoint_union(b2.as_map()).disjoint_union(back);
    IntervalSet rest = s1.unite(s2).unite(r2).complement(ell);
    if (!rest.empty()) m = m.disjoint_union(PartialMap::identity_on(rest));
    return VElement::from_map(m, ell);
}

VElement rotation(const RingElement& alpha) {
    const RingPtr& r = alpha.ring();
    const RingElement one = RingElement::one(r), zero = RingElement::zero(r);
    if (alpha.sign() < 0 || alpha >= one) throw Error(ErrorCode::OutOfRange, "rotation angle " + alpha.str());
    if (alpha.is_zero()) return VElement::identity(one);
    const Slope id = Slope::identity(r->rank());
    return VElement::make({{zero, one - alpha, id, alpha}, {one - alpha, one, id, alpha - one}}, one);
}

long minimal_K(const RingElement& l) {
    const RingElement one = RingElement::one(l.ring());
    RingElement p = l;
    for (long K = 1;; ++K, p *= l)
        if (l + p < one) return K;
}

StandardGenerators standard_generators(const RingPtr& ring, const Slope& lambda) {
    const RingElement l = slope_in_unit(ring, lambda);
    const long K = minimal_K(l);
    const RingElement lK = l.pow(K);
    const RingElement mu1 = l.inverse() - RingElement::integer(ring, l.pow(-K - 1).floor()) * lK;
    std::vector<VElement> f;
    for (long i = 1; i <= K; ++i) f.push_back(rotation(l.pow(i)));
    Bisection c{Affine(RingElement::zero(ring), lambda), IntervalSet(unit_interval(ring))};
    return StandardGenerators{K, l, mu1, c, std::move(f), rotation(mu1)};
}

RingElement mu_sequence(const RingPtr& ring, const Slope& lambda, long i) {
    if (i < 1) throw Error(ErrorCode::OutOfRange, "mu index starts at 1");
    const auto sg = standard_generators(ring, lambda);
    const RingElement linv = sg.lambda.inverse(), lK = sg.lambda.pow(sg.K), lmK = lK.inverse();
    RingElement mu = sg.mu1;
    for (long k = 1; k < i; ++k) {
        const RingElement x = linv * mu;
        mu = x - RingElement::integer(ring, (x * lmK).floor()) * lK;
    }
    return mu;
}

namespace {

// Checks target|tile = e^n base e^-n on tiles (n l, (n+1) l] and the
// union of the tiles, for a base map living on (0, l].
void check_tiling(Report& rep, const std::string& name, const VElement& target, const PartialMap& base,
                  const VElement& e, const RingElement& step) {
    const RingPtr& r = step.ring();
    const RingElement one = RingElement::one(r);
    PartialMap assembled;
    long n = 0;
    for (RingElement lo = RingElement::zero(r); lo < one; lo += step, ++n) {
        Interval tile{lo, lo + step < one ? lo + step : one};
        PartialMap conj = power(e, n).map().compose(base).compose(power(e, -n).map()).restrict(IntervalSet(tile));
        PartialMap want = target.map().restrict(IntervalSet(tile));
        rep.add(name + " on " + tile.str() + " via conjugation by power " + std::to_string(n), conj == want,
                conj == want ? "" : "got " + conj.str());
        assembled = assembled.empty() ? conj : assembled.disjoint_union(conj);
    }
    bool ok = assembled == target.map();
    rep.add(name + ": tiles assemble to the full rotation", ok, ok ? "" : "got " + assembled.str());
}

void check_equal(Report& rep, const std::string& name, const PartialMap& got, const PartialMap& want) {
    bool ok = got == want;
    rep.add(name, ok, ok ? "" : "got " + got.str() + "want " + want.str());
}

}  // namespace

Report verify_fi(const RingPtr& ring, const Slope& lambda, long i) {
    if (i < 1) throw Error(ErrorCode::OutOfRange, "i must be >= 1");
    const auto sg = standard_generators(ring, lambda);
    const RingElement& l = sg.lambda;
    const RingElement zero = RingElement::zero(ring);
    Report rep{"fi", {}};
    const std::string I = std::to_string(i), J = std::to_string(i + 1);
    const VElement fi = rotation(l.pow(i)), fj = rotation(l.pow(i + 1)), f1 = rotation(l);
    const PartialMap C = sg.c.as_map(), Cinv = C.inverse();
    const PartialMap conj = C.compose(fi.map()).compose(Cinv);
    const IntervalSet left(Interval{zero, l - l.pow(i + 1)}), right(Interval{l - l.pow(i + 1), l});
    const PartialMap a = conj.restrict(left);
    const PartialMap b = f1.map().compose(C).compose(fi.map()).compose(Cinv).restrict(right);
    check_equal(rep, "f_" + J + " = c f_" + I + " c^-1 on " + left.str(), a, fj.map().restrict(left));
    check_equal(rep, "f_" + J + " = f_1 c f_" + I + " c^-1 on " + right.str(), b, fj.map().restrict(right));
    const PartialMap base = a.disjoint_union(b);
    const IntervalSet head(Interval{zero, l});
    check_equal(rep, "pieces assemble to f_" + J + " on " + head.str(), base, fj.map().restrict(head));
    check_tiling(rep, "f_" + J, fj, base, f1, l);
    return rep;
}

Report verify_gi(const RingPtr& ring, const Slope& lambda, long i) {
    if (i < 1) throw Error(ErrorCode::OutOfRange, "i must be >= 1");
    const auto sg = standard_generators(ring, lambda);
    const RingElement& l = sg.lambda;
    const RingElement zero = RingElement::zero(ring);
    const RingElement lK = l.pow(sg.K);
    Report rep{"gi", {}};
    const std::string I = std::to_string(i), J = std::to_string(i + 1);
    const RingElement mu = mu_sequence(ring, lambda, i);
    const RingElement x = l.inverse() * mu;
    const mpz_class m = (x * lK.inverse()).floor();
    const RingElement next = x - RingElement::integer(ring, m) * lK;
    rep.add("0 <= mu_" + I + " < l^K", mu.sign() >= 0 && mu < lK, "mu_" + I + " = " + mu.str());
    rep.add("m_" + I + " <= floor(1/l)", m >= 0 && m <= l.inverse().floor(), "m_" + I + " = " + m.get_str());
    rep.add("mu_" + J + " agrees with the recursion", next == mu_sequence(ring, lambda, i + 1), next.str());
    const VElement gi = rotation(mu), gj = rotation(next), f1 = rotation(l);
    const VElement fK = rotation(lK);
    const PartialMap C = sg.c.as_map(), Cinv = C.inverse();
    const IntervalSet head(Interval{zero, l});
    const long mi = m.get_si();
    const PartialMap w = power(fK, -mi).map().compose(Cinv).compose(gi.map()).compose(C).restrict(head);
    check_equal(rep, "g_" + J + " = f_K^-" + m.get_str() + " c^-1 g_" + I + " c on " + head.str(), w,
                gj.map().restrict(head));
    check_tiling(rep, "g_" + J, gj, w, f1, l);
    return rep;
}

Report verify_multigen_step(const RingPtr& ring, const Slope& lambda, const RingElement& alpha,
                            MultigenDirection dir) {
    const RingElement l = slope_in_unit(ring, lambda);
    const RingElement zero = RingElement::zero(ring), one = RingElement::one(ring);
    const PartialMap C = PartialMap::single(Affine(zero, lambda), IntervalSet(unit_interval(ring)));
    const PartialMap Cinv = C.inverse();
    const VElement fa = rotation(alpha.sign() >= 0 && alpha < one ? alpha : zero);
    if (dir == MultigenDirection::TimesLambda) {
        if (alpha.sign() < 0 || alpha >= one) throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 1)");
        Report rep{"multigen-times", {}};
        const RingElement la = l * alpha;
        const VElement target = rotation(la), fl = rotation(l);
        const IntervalSet left(Interval{zero, l * (one - alpha)}), right(Interval{l * (one - alpha), l});
        const PartialMap conj = C.compose(fa.map()).compose(Cinv);
        const PartialMap a = conj.restrict(left);
        const PartialMap b = fl.map().compose(conj).restrict(right);
        check_equal(rep, "f_{l a} = c f_a c^-1 on " + left.str(), a, target.map().restrict(left));
        check_equal(rep, "f_{l a} = f_l c f_a c^-1 on " + right.str(), b, target.map().restrict(right));
        const PartialMap base = a.disjoint_union(b);
        check_equal(rep, "pieces assemble to f_{l a} on (0, l]", base,
                    target.map().restrict(IntervalSet(Interval{zero, l})));
        check_tiling(rep, "f_{l a}", target, base, fl, l);
        return rep;
    }
    if (alpha.sign() < 0 || alpha >= l) throw Error(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, lambda)");
    Report rep{"multigen-div", {}};
    const RingElement beta = *alpha.divide(l);
    const VElement target = rotation(beta);
    const IntervalSet head(Interval{zero, one - beta});
    const PartialMap base = Cinv.compose(fa.map()).compose(C.restrict(head));
    check_equal(rep, "f_{a/l} = c^-1 f_a c on " + head.str(), base, target.map().restrict(head));
    RingElement h = l;
    while (!(h < one - beta)) h *= l;
    const VElement fh = rotation(h);
    PartialMap assembled = base;
    long n = 1;
    for (RingElement lo = one - beta; lo < one; lo += h, ++n) {
        Interval tile{lo, lo + h < one ? lo + h : one};
        PartialMap conj = power(fh, n).map().compose(base).compose(power(fh, -n).map()).restrict(IntervalSet(tile));
        check_equal(rep, "f_{a/l} on " + tile.str() + " via conjugation by f_h^" + std::to_string(n), conj,
                    target.map().restrict(IntervalSet(tile)));
        assembled = assembled.disjoint_union(conj);
    }
    check_equal(rep, "tiles assemble to f_{a/l}", assembled, target.map());
    return rep;
}

RestrictedGenerators restrict_generators(const std::vector<PartialMap>& S, const IntervalSet& U,
                                         const RingElement& M, int depth) {
    const IntervalSet Uc = U.complement(M);
    RestrictedGenerators out;
    for (const auto& B : S) {
        out.S.push_back(B.restrict(U).corestrict(U));
        out.E.push_back(B.restrict(Uc).corestrict(Uc));
        out.Tplus.push_back(B.restrict(Uc).corestrict(U));
        out.Tminus.push_back(B.inverse().restrict(Uc).corestrict(U));
    }
    // bounded word search for a cover of U^c by bisections landing in U
    IntervalSet uncovered = Uc;
    std::vector<PartialMap> letters = S;
    for (const auto& B : S) letters.push_back(B.inverse());
    std::vector<PartialMap> level{PartialMap::identity_on(IntervalSet(Interval{RingElement::zero(M.ring()), M}))};
    std::vector<PartialMap> seen = level;
    for (int d = 1; d <= depth && !uncovered.empty(); ++d) {
        std::vector<PartialMap> next;
        for (const auto& w : level) {
            for (const auto& a : letters) {
                PartialMap aw = a.compose(w);
                if (aw.empty() || std::find(seen.begin(), seen.end(), aw) != seen.end()) continue;
                seen.push_back(aw);
                next.push_back(aw);
                PartialMap cand = aw.restrict(uncovered).corestrict(U);
                if (cand.empty()) continue;
                uncovered = uncovered.subtract(cand.domain());
                out.F.push_back(cand);
                if (uncovered.empty()) break;
            }
            if (uncovered.empty()) break;
        }
        level = std::move(next);
    }
    if (!uncovered.empty())
        throw Error(ErrorCode::CoverNotFound, "no cover of " + uncovered.str() + " within depth " + std::to_string(depth));
    auto keep = [&](const PartialMap& m) {
        if (!m.empty()) out.result.push_back(m);
    };
    for (const auto& s : out.S) keep(s);
    for (const auto& Fj : out.F) {
        const PartialMap Fjinv = Fj.inverse();
        for (const auto& t : out.Tplus) keep(t.compose(Fjinv));
        for (const auto& t : out.Tminus) keep(t.compose(Fjinv));
    }
    for (const auto& Fj : out.F)
        for (const auto& Fl : out.F) {
            const PartialMap Flinv = Fl.inverse();
            for (const auto& e : out.E) {
                keep(Fj.compose(e).compose(Flinv));
                keep(Fj.compose(e.inverse()).compose(Flinv));
            }
        }
    return out;
}

}  // namespace stein
