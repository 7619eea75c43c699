#include "stein/json_io.hpp"

#include "stein/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace stein {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

mpz_class integer_of(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) bad("bad integer '" + j.get<std::string>() + "'");
        return z;
    }
    bad("expected an integer, got " + j.dump());
}

mpq_class rational_of(const Json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) bad("expected a rational, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error&) {
        bad("bad rational '" + j.get<std::string>() + "'");
    }
}

Json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

bool looks_rational(const std::string& s) {
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/' || c == ' ')) return false;
    return !s.empty();
}

}  // namespace

RingPtr ring_with_default_root(const ZPoly& f) {
    if (f.empty() || f.back() != 1) throw Error(ErrorCode::InvalidSpec, "minimal polynomial must be monic");
    std::vector<std::pair<mpq_class, mpq_class>> windows;
    try {
        windows = isolate_real_roots(f);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidSpec, e.what());
    }
    RingPtr above;
    for (const auto& [lo, hi] : windows) {
        RingPtr r = RingSpec::single_algebraic(f, lo, hi);
        const RingElement l = RingElement::generator(r);
        if (l.sign() > 0 && l < RingElement::one(r)) return r;
        if (!above && l > RingElement::one(r)) above = r;
    }
    if (above) return above;
    throw Error(ErrorCode::InvalidSpec, format_polynomial(f) + " has no positive root other than 1");
}

LambdaChoice parse_lambda(const std::string& text) {
    if (!looks_rational(text)) {
        ZPoly f;
        try {
            f = parse_polynomial(text);
        } catch (const Error&) {
            bad("bad polynomial '" + text + "'");
        }
        RingPtr r = ring_with_default_root(f);
        const bool small = RingElement::generator(r) < RingElement::one(r);
        return {r, Slope{{small ? 1L : -1L}}};
    }
    mpq_class q;
    try {
        q = parse_rational(text);
    } catch (const Error&) {
        bad("bad rational '" + text + "'");
    }
    if (q <= 0 || q >= 1) throw Error(ErrorCode::InvalidSpec, "lambda must lie in (0, 1)");
    std::vector<mpz_class> ints;
    Slope s;
    if (q.get_num() > 1) {
        ints.push_back(q.get_num());
        s.e.push_back(1);
    }
    ints.push_back(q.get_den());
    s.e.push_back(-1);
    return {RingSpec::multi_integer(ints), s};
}

RingPtr ring_from_json(const Json& j) {
    if (!j.is_object()) bad("ring must be an object");
    if (j.contains("integers")) {
        const Json& a = j.at("integers");
        if (!a.is_array()) bad("'integers' must be an array");
        std::vector<mpz_class> ints;
        for (const auto& x : a) ints.push_back(integer_of(x));
        return RingSpec::multi_integer(ints);
    }
    const Json& m = field(j, "minpoly");
    ZPoly f;
    if (m.is_string()) {
        try {
            f = parse_polynomial(m.get<std::string>());
        } catch (const Error&) {
            bad("bad polynomial " + m.dump());
        }
    } else if (m.is_array()) {
        for (const auto& x : m) f.push_back(integer_of(x));
    } else {
        bad("'minpoly' must be an array or a string");
    }
    if (!j.contains("rootWindow")) return ring_with_default_root(f);
    const Json& w = j.at("rootWindow");
    if (!w.is_array() || w.size() != 2) bad("'rootWindow' must hold two rationals");
    return RingSpec::single_algebraic(f, rational_of(w[0]), rational_of(w[1]));
}

Json to_json(const RingPtr& ring) {
    Json j;
    if (ring->is_single()) {
        Json m = Json::array();
        for (const auto& c : ring->minpoly()) m.push_back(integer_json(c));
        j["minpoly"] = m;
        j["rootWindow"] = {format_rational(ring->window_lo()), format_rational(ring->window_hi())};
    } else {
        Json a = Json::array();
        for (const auto& n : ring->integers()) a.push_back(integer_json(n));
        j["integers"] = a;
    }
    return j;
}

RingElement element_from_json(const Json& j, const RingPtr& ring) {
    if (j.is_number_integer()) return RingElement::integer(ring, j.get<long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (looks_rational(s)) return RingElement::rational(ring, rational_of(j));
        if (!ring->is_single()) bad("polynomial element over an integer ring");
        ZPoly p;
        try {
            p = parse_polynomial(s);
        } catch (const Error&) {
            bad("bad element '" + s + "'");
        }
        std::map<long, mpz_class> terms;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) terms[static_cast<long>(i)] = p[i];
        return RingElement::laurent(ring, terms);
    }
    if (j.is_object() && j.contains("rational")) return RingElement::rational(ring, rational_of(j.at("rational")));
    if (j.is_object() && j.contains("coeffs")) {
        if (!ring->is_single()) bad("'coeffs' needs an algebraic ring");
        const Json& c = j.at("coeffs");
        if (!c.is_object()) bad("'coeffs' must map exponents to integers");
        std::map<long, mpz_class> terms;
        for (auto it = c.begin(); it != c.end(); ++it) {
            long e = 0;
            try {
                std::size_t used = 0;
                e = std::stol(it.key(), &used);
                if (used != it.key().size()) bad("bad exponent '" + it.key() + "'");
            } catch (const std::logic_error&) {
                bad("bad exponent '" + it.key() + "'");
            }
            terms[e] += integer_of(it.value());
        }
        return RingElement::laurent(ring, terms);
    }
    bad("unrecognised element " + j.dump());
}

Json to_json(const RingElement& x) {
    Json j;
    if (x.ring()->is_single()) {
        Json c = Json::object();
        for (const auto& [e, v] : x.terms()) c[std::to_string(e)] = integer_json(v);
        j["coeffs"] = c;
    } else {
        j["rational"] = format_rational(x.rational_value());
    }
    return j;
}

Slope slope_from_json(const Json& j, const RingPtr& ring) {
    if (j.is_number_integer() && ring->rank() == 1) return Slope{{j.get<long>()}};
    if (!j.is_array() || j.size() != ring->rank()) bad("slope must list " + std::to_string(ring->rank()) + " exponents");
    Slope s;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad("slope exponents must be integers");
        s.e.push_back(x.get<long>());
    }
    return s;
}

Json to_json(const Slope& s) { return Json(s.e); }

VElement velement_from_json(const Json& j) {
    const RingPtr ring = ring_from_json(field(j, "ring"));
    const RingElement ell = element_from_json(field(j, "ell"), ring);
    const Json& segs = field(j, "segments");
    if (!segs.is_array()) bad("'segments' must be an array");
    std::vector<Segment> out;
    for (const auto& s : segs) {
        auto point = [&](const char* name) {
            try {
                return element_from_json(field(s, name), ring);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::NotInGamma || e.code() == ErrorCode::ParseError)
                    throw Error(ErrorCode::BreakpointNotInGamma, std::string(name) + ": " + e.what());
                throw;
            }
        };
        RingElement a = point("a"), b = point("b"), c = point("c");
        Slope mu = slope_from_json(field(s, "slope"), ring);
        out.push_back({a, b, std::move(mu), c});
    }
    return VElement::make(out, ell);
}

Json to_json(const VElement& g) {
    Json j;
    j["ring"] = to_json(g.ring());
    j["ell"] = to_json(g.ell());
    Json segs = Json::array();
    for (const auto& s : g.segments())
        segs.push_back({{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"slope", to_json(s.slope)}, {"c", to_json(s.c)}});
    j["segments"] = segs;
    return j;
}

Json to_json(const Interval& i) { return Json::array({to_json(i.lo), to_json(i.hi)}); }

Json to_json(const IntervalSet& s) {
    Json a = Json::array();
    for (const auto& i : s.parts()) a.push_back(to_json(i));
    return a;
}

Json to_json(const Affine& a) { return {{"c", to_json(a.c())}, {"slope", to_json(a.mu())}}; }

Json to_json(const Bisection& b) {
    return {{"c", to_json(b.g.c())}, {"slope", to_json(b.g.mu())}, {"source", to_json(b.source)}};
}

Json to_json(const Report& r) {
    Json recs = Json::array();
    for (const auto& x : r.records) recs.push_back({{"identity", x.identity}, {"pass", x.pass}, {"detail", x.detail}});
    return {{"schema", "stein.report/1"}, {"suite", r.suite}, {"records", recs}, {"pass", r.pass()}};
}

Json to_json(const FinAbGroup& g) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(integer_json(d));
    return {{"free", g.free_rank}, {"torsion", t}, {"infinite", g.infinite_sum}, {"text", g.str()}};
}

Json to_json(const Dim& d) { return d.infinite ? Json("inf") : Json(d.value); }

Json to_json(const InvariantReport& r) {
    Json j;
    j["schema"] = "stein.invariants/1";
    j["ring"] = r.ring;
    j["ell"] = r.ell;
    j["h0"] = to_json(r.h0.group);
    j["unitClass"] = integer_json(r.h0.unit_class);
    const auto& ab = r.abelianization;
    Json a;
    a["known"] = ab.group.has_value();
    a["group"] = ab.group ? to_json(*ab.group) : Json(nullptr);
    a["rule"] = ab.rule;
    a["conflict"] = ab.conflict;
    if (ab.conflict) a["conflictNote"] = ab.conflict_note;
    a["exactSequence"] = {{"h2", to_json(ab.terms.h2)},
                          {"h0TensorZ2", to_json(ab.terms.h0_tensor_z2)},
                          {"h1", to_json(ab.terms.h1)}};
    j["abelianization"] = a;
    Json h = Json::array();
    for (const auto& g : r.groupoid_homology) h.push_back(to_json(g));
    j["groupoidHomology"] = h;
    Json p = Json::array();
    for (const auto& d : r.rational_poincare) p.push_back(to_json(d));
    j["rationalPoincare"] = p;
    j["acyclicityFlags"] = {{"groupoidAcyclic", r.groupoid_acyclic},
                            {"integrallyAcyclic", r.integrally_acyclic_known ? Json(r.integrally_acyclic) : Json(nullptr)},
                            {"rationallyAcyclic", r.rationally_acyclic}};
    return j;
}

Json to_json(const Verdict& v) {
    return {{"schema", "stein.compare/1"},
            {"verdict", v.obstructed ? "Obstructed" : "NotDistinguished"},
            {"invariant", v.invariant},
            {"reason", v.reason}};
}

GroupSpec group_spec_from_json(const Json& j) {
    RingPtr ring = ring_from_json(field(j, "ring"));
    RingElement ell = j.contains("ell") ? element_from_json(j.at("ell"), ring) : RingElement::one(ring);
    if (ell.sign() <= 0) throw Error(ErrorCode::InvalidSpec, "ell must be positive");
    std::string label;
    if (j.contains("label")) {
        if (!j.at("label").is_string()) bad("'label' must be a string");
        label = j.at("label").get<std::string>();
    }
    return {ring, ell, label};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

}  // namespace stein
