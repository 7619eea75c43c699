#pragma once

// Elements (c, mu) of Gamma x| Lambda acting by t -> mu*(t + c), and finite
// partial maps assembled from them on disjoint intervals.

#include "stein/interval.hpp"
#include "stein/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stein {

class Affine {
public:
    // SlopeNotInLambda if mu does not evaluate to a positive element
    Affine(RingElement c, Slope mu);
    static Affine identity(const RingPtr& r);
    static Affine translation(RingElement c);

    const RingElement& c() const { return c_; }
    const Slope& mu() const { return mu_; }
    const RingElement& mu_value() const { return muv_; }
    bool is_identity() const;
    bool is_translation() const;

    RingElement operator()(const RingElement& t) const { return muv_ * (t + c_); }
    CantorPoint operator()(const CantorPoint& p) const { return {(*this)(p.value), p.plus}; }
    Interval operator()(const Interval& i) const { return {(*this)(i.lo), (*this)(i.hi)}; }
    IntervalSet operator()(const IntervalSet& s) const;

    // (g*h)(t) = g(h(t))
    Affine operator*(const Affine& h) const;
    Affine inverse() const;
    bool operator==(const Affine& o) const { return mu_ == o.mu_ && c_ == o.c_; }
    std::string str() const;

private:
    RingElement c_;
    Slope mu_;
    RingElement muv_;
};

struct Piece {
    Interval domain;
    Affine map;

    Interval image() const { return map(domain); }
    bool operator==(const Piece&) const = default;
};

// Finitely many affine pieces on disjoint domains, sorted by domain.
class PartialMap {
public:
    PartialMap() = default;
    explicit PartialMap(std::vector<Piece> pieces);
    static PartialMap single(const Affine& a, const IntervalSet& source);
    static PartialMap identity_on(const IntervalSet& s);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    IntervalSet domain() const;
    IntervalSet range() const;

    std::optional<CantorPoint> apply(const CantorPoint& p) const;
    std::optional<RingElement> apply(const RingElement& t) const;

    // this after h
    PartialMap compose(const PartialMap& h) const;
    PartialMap inverse() const;
    PartialMap restrict(const IntervalSet& s) const;
    PartialMap corestrict(const IntervalSet& s) const;
    // OverlappingSourceRange if domains or ranges meet
    PartialMap disjoint_union(const PartialMap& o) const;

    // merge abutting pieces carrying the same affine map
    PartialMap normalized() const;
    bool operator==(const PartialMap& o) const;
    std::string str() const;

private:
    std::vector<Piece> pieces_;
};

}  // namespace stein
