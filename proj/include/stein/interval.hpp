#pragma once

// Points a+ / a- of the doubled line and clopen intervals [a+, b-].
// An interval is stored as the real half-open interval (a, b]; the two
// descriptions pick out the same Gamma-points.

#include "stein/ring.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace stein {

struct CantorPoint {
    RingElement value;
    bool plus = true;

    static CantorPoint up(RingElement v) { return {std::move(v), true}; }
    static CantorPoint down(RingElement v) { return {std::move(v), false}; }

    bool operator==(const CantorPoint& o) const { return plus == o.plus && value == o.value; }
    // a- < a+, otherwise by value
    std::strong_ordering operator<=>(const CantorPoint& o) const;
    std::string str() const;
};

struct Interval {
    RingElement lo, hi;  // (lo, hi], equivalently [lo+, hi-]

    bool empty() const { return !(lo < hi); }
    bool contains(const CantorPoint& p) const;
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool overlaps(const Interval& o) const { return lo < o.hi && o.lo < hi; }
    RingElement length() const { return hi - lo; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    std::string str() const;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Finite disjoint union of intervals, kept sorted with touching pieces merged.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(Interval i);
    static IntervalSet from(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const CantorPoint& p) const;
    bool contains(const IntervalSet& o) const;
    bool disjoint(const IntervalSet& o) const;

    IntervalSet unite(const IntervalSet& o) const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet subtract(const IntervalSet& o) const;
    // complement inside (0, ell]
    IntervalSet complement(const RingElement& ell) const;

    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }
    std::string str() const;

private:
    std::vector<Interval> parts_;
};

}  // namespace stein
