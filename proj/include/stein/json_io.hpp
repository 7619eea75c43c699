#pragma once

// JSON forms of rings, elements, group elements and reports.
//
//   ring     {"minpoly": [a0, ..., 1], "rootWindow": ["p/q", "r/s"]} or {"integers": [n1, ...]}
//   element  {"coeffs": {"e": c, ...}} or {"rational": "p/q"}; also a bare integer or string
//   velement {"ring": ..., "ell": ..., "segments": [{"a", "b", "slope": [...], "c"}, ...]}
//
// Malformed documents raise ParseError; well-formed but invalid rings raise
// InvalidSpec.

#include "stein/groupoid.hpp"
#include "stein/invariants.hpp"
#include "stein/pl.hpp"
#include "stein/report.hpp"
#include "stein/ring.hpp"

#include <json.hpp>

#include <string>

namespace stein {

using Json = nlohmann::ordered_json;

// Ring for a monic f using its root in (0, 1) if there is one, else a root > 1.
RingPtr ring_with_default_root(const ZPoly& f);

struct LambdaChoice {
    RingPtr ring;
    Slope slope;  // value in (0, 1)
};
// "t^2+t-1" (slope l or 1/l, whichever is below 1) or "p/q" (integer ring).
LambdaChoice parse_lambda(const std::string& text);

RingPtr ring_from_json(const Json& j);
Json to_json(const RingPtr& ring);

RingElement element_from_json(const Json& j, const RingPtr& ring);
Json to_json(const RingElement& x);

Slope slope_from_json(const Json& j, const RingPtr& ring);
Json to_json(const Slope& s);

VElement velement_from_json(const Json& j);
Json to_json(const VElement& g);

Json to_json(const Interval& i);
Json to_json(const IntervalSet& s);
Json to_json(const Affine& a);
Json to_json(const Bisection& b);
Json to_json(const Report& r);

Json to_json(const FinAbGroup& g);
Json to_json(const Dim& d);
Json to_json(const InvariantReport& r);
Json to_json(const Verdict& v);

struct GroupSpec {
    RingPtr ring;
    RingElement ell;
    std::string label;
};
// InvalidSpec unless ell > 0.
GroupSpec group_spec_from_json(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace stein
