#include "stein/interval.hpp"

#include <algorithm>

namespace stein {

std::strong_ordering CantorPoint::operator<=>(const CantorPoint& o) const {
    auto c = value <=> o.value;
    if (c != 0) return c;
    if (plus == o.plus) return std::strong_ordering::equal;
    return plus ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string CantorPoint::str() const { return "(" + value.str() + ")" + (plus ? "+" : "-"); }

bool Interval::contains(const CantorPoint& p) const {
    if (p.plus) return lo <= p.value && p.value < hi;
    return lo < p.value && p.value <= hi;
}

std::string Interval::str() const { return "(" + lo.str() + ", " + hi.str() + "]"; }

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const RingElement& lo = a.lo < b.lo ? b.lo : a.lo;
    const RingElement& hi = a.hi < b.hi ? a.hi : b.hi;
    if (!(lo < hi)) return std::nullopt;
    return Interval{lo, hi};
}

IntervalSet::IntervalSet(Interval i) {
    if (!i.empty()) parts_.push_back(std::move(i));
}

IntervalSet IntervalSet::from(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& i) { return i.empty(); });
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet s;
    for (auto& p : parts) {
        if (!s.parts_.empty() && p.lo <= s.parts_.back().hi) {
            if (s.parts_.back().hi < p.hi) s.parts_.back().hi = p.hi;
        } else {
            s.parts_.push_back(std::move(p));
        }
    }
    return s;
}

bool IntervalSet::contains(const CantorPoint& p) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(p); });
}

bool IntervalSet::contains(const IntervalSet& o) const { return o.subtract(*this).empty(); }

bool IntervalSet::disjoint(const IntervalSet& o) const { return intersect(o).empty(); }

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return from(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < o.parts_.size()) {
        if (auto x = stein::intersect(parts_[i], o.parts_[j])) out.push_back(*x);
        if (parts_[i].hi < o.parts_[j].hi) ++i;
        else ++j;
    }
    return from(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
        RingElement cur = p.lo;
        for (const auto& q : o.parts_) {
            if (!(q.lo < p.hi)) break;
            if (!(cur < q.hi)) continue;
            if (cur < q.lo) out.push_back({cur, q.lo});
            if (cur < q.hi) cur = q.hi;
        }
        if (cur < p.hi) out.push_back({cur, p.hi});
    }
    return from(std::move(out));
}

IntervalSet IntervalSet::complement(const RingElement& ell) const {
    return IntervalSet(Interval{RingElement::zero(ell.ring()), ell}).subtract(*this);
}

std::string IntervalSet::str() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? " u " : "") + parts_[i].str();
    return s;
}

}  // namespace stein
