#include "stein/error.hpp"
#include "stein/fuzz.hpp"
#include "stein/json_io.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace stein;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::IllDefined;
}

RingPtr golden() { return RingSpec::single_algebraic({-1, 1, 1}, 0, 1); }

const char* kRotation = R"({
  "ring": {"integers": [2, 3]},
  "ell": 1,
  "segments": [
    {"a": 0, "b": "1/2", "slope": [0, 0], "c": "1/2"},
    {"a": "1/2", "b": 1, "slope": [0, 0], "c": "-1/2"}
  ]
})";

}  // namespace

TEST(JsonRing, Forms) {
    const RingPtr a = ring_from_json(parse_json(R"({"minpoly": [-1, 1, 1], "rootWindow": ["0", "1"]})"));
    EXPECT_TRUE(a->same_as(*golden()));
    const RingPtr b = ring_from_json(parse_json(R"({"minpoly": "t^2+t-1"})"));
    EXPECT_TRUE(b->same_as(*golden()));
    const RingPtr c = ring_from_json(parse_json(R"({"integers": [2, "3"]})"));
    EXPECT_EQ(c->integers(), (std::vector<mpz_class>{2, 3}));
    EXPECT_TRUE(ring_from_json(to_json(a))->same_as(*a));
    EXPECT_TRUE(ring_from_json(to_json(c))->same_as(*c));
}

TEST(JsonRing, DefaultRootPrefersUnitInterval) {
    // t^2 - 3t + 1 has roots near 0.38 and 2.62
    const RingPtr r = ring_with_default_root({1, -3, 1});
    const RingElement l = RingElement::generator(r);
    EXPECT_GT(l.sign(), 0);
    EXPECT_LT(l, RingElement::one(r));
    const RingPtr s = ring_with_default_root({-3, 1});
    EXPECT_EQ(RingElement::generator(s), RingElement::integer(s, 3));
}

TEST(JsonRing, Errors) {
    EXPECT_EQ(code_of([] { ring_from_json(parse_json(R"({"integers": [2, 2]})")); }), ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { ring_from_json(parse_json(R"({"minpoly": [-4, 0, 1]})")); }), ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { ring_from_json(parse_json(R"({"minpoly": 7})")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { ring_from_json(parse_json(R"({"integers": ["x"]})")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { ring_from_json(parse_json(R"({"minpoly": [-1, 1, 1], "rootWindow": ["0"]})")); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { ring_from_json(parse_json("[]")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { parse_json("{\"ring\": "); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { read_json_file("/nonexistent/spec.json"); }), ErrorCode::ParseError);
}

TEST(JsonElement, Forms) {
    const RingPtr r = golden();
    const RingElement l = RingElement::generator(r);
    EXPECT_EQ(element_from_json(parse_json("3"), r), RingElement::integer(r, 3));
    EXPECT_EQ(element_from_json(parse_json(R"("t^2+1")"), r), l * l + RingElement::one(r));
    EXPECT_EQ(element_from_json(parse_json(R"({"coeffs": {"-1": 1, "0": -1}})"), r), l.pow(-1) - RingElement::one(r));
    const RingPtr z = RingSpec::multi_integer({2, 3});
    EXPECT_EQ(element_from_json(parse_json(R"("5/6")"), z), RingElement::rational(z, mpq_class(5, 6)));
    EXPECT_EQ(element_from_json(parse_json(R"({"rational": "-1/4"})"), z), RingElement::rational(z, mpq_class(-1, 4)));
    EXPECT_EQ(code_of([&] { element_from_json(parse_json(R"("1/5")"), z); }), ErrorCode::NotInGamma);
    EXPECT_EQ(code_of([&] { element_from_json(parse_json(R"({"coeffs": {"a": 1}})"), r); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([&] { element_from_json(parse_json("[1]"), r); }), ErrorCode::ParseError);
}

TEST(JsonElement, RoundTripsFuzzed) {
    for (const RingPtr& r : {golden(), RingSpec::multi_integer({2, 3})}) {
        fuzz::Engine g(17);
        for (int i = 0; i < 50; ++i) {
            const RingElement x = fuzz::unit_element(r, g) - fuzz::unit_element(r, g);
            EXPECT_EQ(element_from_json(to_json(x), r), x);
        }
    }
}

TEST(JsonLambda, Parse) {
    const LambdaChoice a = parse_lambda("t^2+t-1");
    EXPECT_EQ(a.slope.e, std::vector<long>{1});
    const LambdaChoice b = parse_lambda("t^2-t-1");  // root 1.618, so lambda is its inverse
    EXPECT_EQ(b.slope.e, std::vector<long>{-1});
    const RingElement bv = RingElement::slope_value(b.ring, b.slope);
    EXPECT_LT(bv, RingElement::one(b.ring));
    const LambdaChoice c = parse_lambda("2/3");
    EXPECT_EQ(c.ring->integers(), (std::vector<mpz_class>{2, 3}));
    EXPECT_EQ(RingElement::slope_value(c.ring, c.slope), RingElement::rational(c.ring, mpq_class(2, 3)));
    const LambdaChoice d = parse_lambda("1/2");
    EXPECT_EQ(d.ring->integers(), std::vector<mpz_class>{2});
    EXPECT_EQ(code_of([] { parse_lambda("3/2"); }), ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { parse_lambda("t^^2"); }), ErrorCode::ParseError);
}

TEST(JsonVElement, RotationDocument) {
    const VElement g = velement_from_json(parse_json(kRotation));
    const RingPtr& r = g.ring();
    EXPECT_EQ(g, rotation(RingElement::rational(r, mpq_class(1, 2))));
    EXPECT_EQ(velement_from_json(to_json(g)), g);
    EXPECT_TRUE(compose(g, g).is_identity());
}

TEST(JsonVElement, RoundTripsFuzzed) {
    for (const RingPtr& r : {golden(), RingSpec::multi_integer({2, 3})}) {
        fuzz::Engine g(23);
        for (int i = 0; i < 30; ++i) {
            const VElement x = fuzz::element(r, g);
            const Json j = to_json(x);
            EXPECT_EQ(velement_from_json(j), x);
            EXPECT_EQ(to_json(velement_from_json(j)).dump(), j.dump());
        }
    }
}

TEST(JsonVElement, Errors) {
    Json j = parse_json(kRotation);
    j["segments"][0]["b"] = "1/5";
    j["segments"][1]["a"] = "1/5";
    EXPECT_EQ(code_of([&] { velement_from_json(j); }), ErrorCode::BreakpointNotInGamma);
    j = parse_json(kRotation);
    j["segments"][0]["slope"] = Json::array({1, 0});
    EXPECT_NE(code_of([&] { velement_from_json(j); }), ErrorCode::IllDefined);
    j = parse_json(kRotation);
    j["segments"][1]["b"] = "3/4";
    EXPECT_EQ(code_of([&] { velement_from_json(j); }), ErrorCode::NotAPartition);
    j = parse_json(kRotation);
    j.erase("segments");
    EXPECT_EQ(code_of([&] { velement_from_json(j); }), ErrorCode::ParseError);
    j = parse_json(kRotation);
    j["segments"][0]["slope"] = Json::array({0});
    EXPECT_EQ(code_of([&] { velement_from_json(j); }), ErrorCode::ParseError);
}

TEST(JsonGroupSpec, Defaults) {
    const GroupSpec s = group_spec_from_json(parse_json(R"({"ring": {"minpoly": [-3, 1]}})"));
    EXPECT_EQ(s.ell, RingElement::one(s.ring));
    EXPECT_TRUE(s.label.empty());
    const GroupSpec t = group_spec_from_json(parse_json(R"({"ring": {"minpoly": [-3, 1]}, "ell": 2, "label": "V_{3,2}"})"));
    EXPECT_EQ(t.ell, RingElement::integer(t.ring, 2));
    EXPECT_EQ(t.label, "V_{3,2}");
    EXPECT_EQ(code_of([] { group_spec_from_json(parse_json(R"({"ring": {"integers": [2]}, "ell": 0})")); }),
              ErrorCode::InvalidSpec);
    EXPECT_EQ(code_of([] { group_spec_from_json(parse_json(R"({"ell": 1})")); }), ErrorCode::ParseError);
}

TEST(JsonReport, InvariantSchema) {
    const RingPtr r = RingSpec::single_algebraic({-3, 1}, 2, 4);
    const Json j = to_json(invariant_report(r, RingElement::one(r), 3));
    EXPECT_EQ(j["schema"], "stein.invariants/1");
    EXPECT_EQ(j["h0"]["text"], "Z/2");
    EXPECT_EQ(j["unitClass"], 1);
    EXPECT_EQ(j["abelianization"]["group"]["text"], "Z/2");
    EXPECT_EQ(j["groupoidHomology"].size(), 4u);
    EXPECT_TRUE(j["acyclicityFlags"]["rationallyAcyclic"].get<bool>());
    // identical input, identical bytes
    EXPECT_EQ(j.dump(), to_json(invariant_report(r, RingElement::one(r), 3)).dump());

    const Json c = to_json(invariant_report(golden(), RingElement::one(golden()), 2));
    EXPECT_TRUE(c["abelianization"]["conflict"].get<bool>());
    EXPECT_TRUE(c["abelianization"].contains("conflictNote"));
}

TEST(JsonReport, VerdictAndDims) {
    const Json v = to_json(Verdict{true, "unit class", "1 vs 0"});
    EXPECT_EQ(v["schema"], "stein.compare/1");
    EXPECT_EQ(v["verdict"], "Obstructed");
    EXPECT_EQ(to_json(Dim::inf()), "inf");
    EXPECT_EQ(to_json(Dim{3, false}), 3);
    Report rep{"demo", {}};
    rep.add("x", true);
    rep.add("y", false, "why");
    const Json jr = to_json(rep);
    EXPECT_EQ(jr["schema"], "stein.report/1");
    EXPECT_FALSE(jr["pass"].get<bool>());
    EXPECT_EQ(jr["records"][1]["detail"], "why");
}
