#include "stein/pl.hpp"

#include "stein/error.hpp"

#include <algorithm>

namespace stein {

namespace {

Interval whole(const RingElement& ell) { return {RingElement::zero(ell.ring()), ell}; }

void check_images(const PartialMap& m, const RingElement& ell) {
    std::vector<Interval> imgs;
    for (const auto& p : m.pieces()) imgs.push_back(p.image());
    std::sort(imgs.begin(), imgs.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < imgs.size(); ++i)
        if (imgs[i].lo < imgs[i - 1].hi)
            throw Error(ErrorCode::NotABijection, "images overlap at " + imgs[i].str());
    if (!(m.range() == IntervalSet(whole(ell))))
        throw Error(ErrorCode::NotABijection, "images " + m.range().str() + " do not fill " + whole(ell).str());
}

void check_same(const VElement& g, const VElement& h) {
    if (!g.ring()->same_as(*h.ring())) throw Error(ErrorCode::MismatchedLength, "elements over different rings");
    if (!(g.ell() == h.ell())) throw Error(ErrorCode::MismatchedLength, "elements of different lengths");
}

RingElement lambda_value(const Slope& lambda, const RingPtr& ring) {
    RingElement l = RingElement::slope_value(ring, lambda);
    if (l.sign() <= 0) throw Error(ErrorCode::SlopeNotInLambda, "lambda must be positive");
    if (l * 2 > RingElement::one(ring)) throw Error(ErrorCode::LambdaTooLarge, "lambda = " + l.str() + " exceeds 1/2");
    return l;
}

}  // namespace

VElement VElement::make(const std::vector<Segment>& segs, const RingElement& ell) {
    if (ell.sign() <= 0) throw Error(ErrorCode::NotAPartition, "length must be positive");
    if (segs.empty()) throw Error(ErrorCode::NotAPartition, "no segments");
    std::vector<Piece> pieces;
    RingElement cur = RingElement::zero(ell.ring());
    for (const auto& s : segs) {
        if (!s.a.ring()->same_as(*ell.ring()) || !s.b.ring()->same_as(*ell.ring()) ||
            !s.c.ring()->same_as(*ell.ring()))
            throw Error(ErrorCode::MismatchedSpec, "segment over a different ring");
        if (!(s.a == cur)) throw Error(ErrorCode::NotAPartition, "segment starts at " + s.a.str() + ", expected " + cur.str());
        if (!(s.a < s.b)) throw Error(ErrorCode::NotAPartition, "empty segment at " + s.a.str());
        if (!(s.b <= ell)) throw Error(ErrorCode::NotAPartition, "segment ends past ell");
        Affine map(s.c, s.slope);
        pieces.push_back({{s.a, s.b}, std::move(map)});
        cur = s.b;
    }
    if (!(cur == ell)) throw Error(ErrorCode::NotAPartition, "segments stop at " + cur.str());
    PartialMap m(std::move(pieces));
    check_images(m, ell);
    return VElement(ell, m.normalized());
}

VElement VElement::from_map(const PartialMap& m, const RingElement& ell) {
    if (!(m.domain() == IntervalSet(whole(ell)))) throw Error(ErrorCode::NotAPartition, "domain is " + m.domain().str());
    check_images(m, ell);
    return VElement(ell, m.normalized());
}

VElement VElement::identity(const RingElement& ell) {
    return VElement(ell, PartialMap::identity_on(IntervalSet(whole(ell))));
}

std::vector<Segment> VElement::segments() const {
    std::vector<Segment> out;
    for (const auto& p : map_.pieces()) out.push_back({p.domain.lo, p.domain.hi, p.map.mu(), p.map.c()});
    return out;
}

RingElement VElement::operator()(const RingElement& t) const {
    auto v = map_.apply(t);
    if (!v) throw Error(ErrorCode::OutOfRange, t.str() + " outside (0, ell]");
    return *v;
}

bool VElement::is_identity() const {
    return map_.pieces().size() == 1 && map_.pieces()[0].map.is_identity();
}

VElement compose(const VElement& g, const VElement& h) {
    check_same(g, h);
    return VElement::from_map(g.map().compose(h.map()), g.ell());
}

VElement invert(const VElement& g) { return VElement::from_map(g.map().inverse(), g.ell()); }

VElement commutator(const VElement& g, const VElement& h) {
    return compose(invert(h), compose(invert(g), compose(h, g)));
}

VElement power(const VElement& g, long n) {
    VElement base = n >= 0 ? g : invert(g);
    VElement r = VElement::identity(g.ell());
    for (long k = 0; k < (n >= 0 ? n : -n); ++k) r = compose(base, r);
    return r;
}

Membership membership(const VElement& g) {
    const auto& ps = g.map().pieces();
    Membership m;
    m.inIE = std::all_of(ps.begin(), ps.end(), [](const Piece& p) { return p.map.is_translation(); });
    const RingElement zero = RingElement::zero(g.ring());
    bool f = ps.front().image().lo.is_zero();
    for (std::size_t i = 0; i + 1 < ps.size() && f; ++i) f = ps[i].image().hi == ps[i + 1].image().lo;
    m.inF = f;
    bool t = true;
    for (std::size_t i = 0; i < ps.size() && t; ++i) {
        const Interval a = ps[i].image(), b = ps[(i + 1) % ps.size()].image();
        t = a.hi == b.lo || (a.hi == g.ell() && b.lo.is_zero());
    }
    m.inT = t;
    return m;
}

std::pair<VElement, VElement> zappa_szep_decompose(const VElement& g) {
    // f has the derivative of g on each piece with images stacked in order
    std::vector<Piece> fp;
    RingElement cur = RingElement::zero(g.ring());
    for (const auto& p : g.map().pieces()) {
        const RingElement& mu = p.map.mu_value();
        // mu (a + c) = cur
        RingElement c = *cur.divide(mu) - p.domain.lo;
        fp.push_back({p.domain, Affine(c, p.map.mu())});
        cur += mu * p.domain.length();
    }
    VElement f = VElement::from_map(PartialMap(std::move(fp)), g.ell());
    VElement ie = compose(g, invert(f));
    return {ie, f};
}

IntervalSet support(const VElement& g) {
    std::vector<Interval> v;
    for (const auto& p : g.map().pieces())
        if (!p.map.is_identity()) v.push_back(p.domain);
    return IntervalSet::from(std::move(v));
}

VElement sample_f(const Slope& lambda, const RingElement& ell, bool figure_variant) {
    const RingPtr& r = ell.ring();
    const RingElement l = lambda_value(lambda, r);
    const RingElement zero = RingElement::zero(r);
    const RingElement l2 = l * l, l3 = l2 * l, l4 = l3 * l;
    const Slope inv = lambda.inverse();
    std::vector<Segment> s;
    if (figure_variant) {
        s.push_back({zero, l2, lambda, zero});
        s.push_back({l2, l2 + l3, inv, l4 - l2});
    } else {
        s.push_back({zero, l2, inv, zero});
        s.push_back({l2, l2 + l3, lambda, l - l2});
    }
    if (l2 + l3 < ell) s.push_back({l2 + l3, ell, Slope::identity(r->rank()), zero});
    return VElement::make(s, ell);
}

VElement sample_b(const Slope& lambda, const RingPtr& r) {
    const RingElement l = lambda_value(lambda, r);
    const RingElement one = RingElement::one(r);
    const Slope id = Slope::identity(r->rank());
    return VElement::make({{RingElement::zero(r), l, id, one - l}, {l, one, id, -l}}, one);
}

VElement sample_g(const Slope& lambda, const RingPtr& r) {
    const RingElement l = lambda_value(lambda, r);
    const RingElement one = RingElement::one(r), zero = RingElement::zero(r);
    const RingElement l2 = l * l;
    const Slope id = Slope::identity(r->rank());
    std::vector<Segment> s{{zero, l, id, zero}, {l, l + l2, id, l2}, {l + l2, l + l2 * 2, id, -l2}};
    if (l + l2 * 2 < one) s.push_back({l + l2 * 2, one, id, zero});
    return VElement::make(s, one);
}

}  // namespace stein
