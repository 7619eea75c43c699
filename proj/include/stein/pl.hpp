#pragma once

// Right-continuous piecewise linear bijections of (0, ell] with slopes in
// Lambda and breakpoints in Gamma.

#include "stein/affine.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stein {

struct Segment {
    RingElement a, b;  // domain (a, b]
    Slope slope;
    RingElement c;     // t -> slope * (t + c)
    bool operator==(const Segment&) const = default;
};

class VElement {
public:
    // NotAPartition, NotABijection, SlopeNotInLambda, BreakpointNotInGamma
    static VElement make(const std::vector<Segment>& segments, const RingElement& ell);
    // domain and range must both be (0, ell]
    static VElement from_map(const PartialMap& m, const RingElement& ell);
    static VElement identity(const RingElement& ell);

    const RingElement& ell() const { return ell_; }
    const RingPtr& ring() const { return ell_.ring(); }
    const PartialMap& map() const { return map_; }
    std::vector<Segment> segments() const;

    std::optional<CantorPoint> operator()(const CantorPoint& x) const { return map_.apply(x); }
    RingElement operator()(const RingElement& t) const;

    bool is_identity() const;
    bool operator==(const VElement& o) const { return ell_ == o.ell_ && map_ == o.map_; }
    std::string str() const { return map_.str(); }

private:
    VElement(RingElement ell, PartialMap m) : ell_(std::move(ell)), map_(std::move(m)) {}
    RingElement ell_;
    PartialMap map_;  // normalized
};

// g after h. MismatchedLength for different ell or ring.
VElement compose(const VElement& g, const VElement& h);
VElement invert(const VElement& g);
// h^-1 g^-1 h g: apply g, then h, then g^-1, then h^-1
VElement commutator(const VElement& g, const VElement& h);
VElement power(const VElement& g, long n);

struct Membership {
    bool inF = false;
    bool inT = false;
    bool inIE = false;
};
Membership membership(const VElement& g);

// g = ie after f with ie an interval exchange and f in F
std::pair<VElement, VElement> zappa_szep_decompose(const VElement& g);

IntervalSet support(const VElement& g);

// The three elements of the nontriviality argument. lambda is a slope value
// with 0 < lambda <= 1/2, else LambdaTooLarge.
// figure_variant = false selects the printed formula for f, which is not a
// bijection and raises NotABijection.
VElement sample_f(const Slope& lambda, const RingElement& ell, bool figure_variant = true);
VElement sample_b(const Slope& lambda, const RingPtr& ring);
VElement sample_g(const Slope& lambda, const RingPtr& ring);

}  // namespace stein
