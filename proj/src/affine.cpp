#include "stein/affine.hpp"

#include "stein/error.hpp"

#include <algorithm>

namespace stein {

Affine::Affine(RingElement c, Slope mu)
    : c_(std::move(c)), mu_(std::move(mu)), muv_(RingElement::slope_value(c_.ring(), mu_)) {
    if (muv_.sign() <= 0) throw Error(ErrorCode::SlopeNotInLambda, "slope must be positive");
}

Affine Affine::identity(const RingPtr& r) { return Affine(RingElement::zero(r), Slope::identity(r->rank())); }

Affine Affine::translation(RingElement c) {
    const std::size_t k = c.ring()->rank();
    return Affine(std::move(c), Slope::identity(k));
}

bool Affine::is_identity() const { return is_translation() && c_.is_zero(); }

bool Affine::is_translation() const { return mu_ == Slope::identity(mu_.e.size()); }

IntervalSet Affine::operator()(const IntervalSet& s) const {
    std::vector<Interval> out;
    for (const auto& i : s.parts()) out.push_back((*this)(i));
    return IntervalSet::from(std::move(out));
}

Affine Affine::operator*(const Affine& h) const {
    // mu(nu(t + b) + c) = mu nu (t + b + c/nu)
    return Affine(h.c_ + *c_.divide(h.muv_), mu_ * h.mu_);
}

Affine Affine::inverse() const { return Affine(-(muv_ * c_), mu_.inverse()); }

std::string Affine::str() const {
    std::string s = "(" + c_.str() + ", [";
    for (std::size_t i = 0; i < mu_.e.size(); ++i) s += (i ? "," : "") + std::to_string(mu_.e[i]);
    return s + "])";
}

namespace {

void sort_pieces(std::vector<Piece>& v) {
    std::sort(v.begin(), v.end(), [](const Piece& a, const Piece& b) { return a.domain.lo < b.domain.lo; });
}

}  // namespace

PartialMap::PartialMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    std::erase_if(pieces_, [](const Piece& p) { return p.domain.empty(); });
    sort_pieces(pieces_);
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].domain.lo < pieces_[i - 1].domain.hi)
            throw Error(ErrorCode::OverlappingSourceRange, "piece domains overlap at " + pieces_[i].domain.str());
}

PartialMap PartialMap::single(const Affine& a, const IntervalSet& source) {
    std::vector<Piece> v;
    for (const auto& i : source.parts()) v.push_back({i, a});
    return PartialMap(std::move(v));
}

PartialMap PartialMap::identity_on(const IntervalSet& s) {
    if (s.empty()) return {};
    return single(Affine::identity(s.parts().front().lo.ring()), s);
}

IntervalSet PartialMap::domain() const {
    std::vector<Interval> v;
    for (const auto& p : pieces_) v.push_back(p.domain);
    return IntervalSet::from(std::move(v));
}

IntervalSet PartialMap::range() const {
    std::vector<Interval> v;
    for (const auto& p : pieces_) v.push_back(p.image());
    return IntervalSet::from(std::move(v));
}

std::optional<CantorPoint> PartialMap::apply(const CantorPoint& x) const {
    for (const auto& p : pieces_)
        if (p.domain.contains(x)) return p.map(x);
    return std::nullopt;
}

std::optional<RingElement> PartialMap::apply(const RingElement& t) const {
    for (const auto& p : pieces_)
        if (p.domain.lo < t && t <= p.domain.hi) return p.map(t);
    return std::nullopt;
}

PartialMap PartialMap::compose(const PartialMap& h) const {
    std::vector<Piece> out;
    for (const auto& hp : h.pieces_) {
        const Interval img = hp.image();
        const Affine hinv = hp.map.inverse();
        for (const auto& gp : pieces_) {
            auto o = stein::intersect(img, gp.domain);
            if (!o) continue;
            out.push_back({hinv(*o), gp.map * hp.map});
        }
    }
    return PartialMap(std::move(out));
}

PartialMap PartialMap::inverse() const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) out.push_back({p.image(), p.map.inverse()});
    return PartialMap(std::move(out));
}

PartialMap PartialMap::restrict(const IntervalSet& s) const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        const IntervalSet part = IntervalSet(p.domain).intersect(s);
        for (const auto& i : part.parts()) out.push_back({i, p.map});
    }
    return PartialMap(std::move(out));
}

PartialMap PartialMap::corestrict(const IntervalSet& s) const { return inverse().restrict(s).inverse(); }

PartialMap PartialMap::disjoint_union(const PartialMap& o) const {
    if (!domain().disjoint(o.domain()))
        throw Error(ErrorCode::OverlappingSourceRange, "sources overlap");
    if (!range().disjoint(o.range())) throw Error(ErrorCode::OverlappingSourceRange, "ranges overlap");
    std::vector<Piece> v = pieces_;
    v.insert(v.end(), o.pieces_.begin(), o.pieces_.end());
    return PartialMap(std::move(v));
}

PartialMap PartialMap::normalized() const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        if (!out.empty() && out.back().domain.hi == p.domain.lo && out.back().map == p.map) {
            out.back().domain.hi = p.domain.hi;
        } else {
            out.push_back(p);
        }
    }
    PartialMap m;
    m.pieces_ = std::move(out);
    return m;
}

bool PartialMap::operator==(const PartialMap& o) const { return normalized().pieces_ == o.normalized().pieces_; }

std::string PartialMap::str() const {
    std::string s;
    for (const auto& p : pieces_) s += p.domain.str() + " -> " + p.map.str() + "\n";
    return s;
}

}  // namespace stein
