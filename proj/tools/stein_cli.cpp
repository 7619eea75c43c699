// stein: invariants, verification suites and element arithmetic for
// V(Gamma, Lambda, ell).
//
// Exit codes: 0 pass / not distinguished, 1 obstructed / failed,
// 2 usage or parse error, 3 invalid or ill-defined spec.

#include "stein/error.hpp"
#include "stein/fuzz.hpp"
#include "stein/groupoid.hpp"
#include "stein/invariants.hpp"
#include "stein/json_io.hpp"
#include "stein/kgraph.hpp"
#include "stein/pl.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace stein;

namespace {

bool g_approx = false;

std::string show(const RingElement& x) {
    std::string s = x.str();
    if (g_approx) s += "  ~" + x.approx(12);
    return s;
}

std::string show(const Interval& i) { return "[" + show(i.lo) + ", " + show(i.hi) + "]"; }

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidSpec:
    case ErrorCode::IllDefined:
    case ErrorCode::NotInGamma:
    case ErrorCode::MismatchedSpec:
    case ErrorCode::NotAPartition:
    case ErrorCode::NotABijection:
    case ErrorCode::SlopeNotInLambda:
    case ErrorCode::BreakpointNotInGamma:
    case ErrorCode::MismatchedLength:
        return 3;
    default:
        return 2;
    }
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit(const Report& rep, bool json) {
    if (json) {
        print(to_json(rep));
    } else {
        long ok = 0;
        for (const auto& r : rep.records) {
            ok += r.pass;
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.identity;
            if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
        }
        std::cout << rep.suite << ": " << ok << "/" << rep.records.size() << " passed\n";
    }
    return rep.pass() ? 0 : 1;
}

CantorPoint parse_point(const std::string& text, const RingPtr& ring) {
    if (text.size() < 2 || (text.back() != '+' && text.back() != '-'))
        throw Error(ErrorCode::ParseError, "point '" + text + "' must end in + or -");
    const RingElement v = element_from_json(Json(text.substr(0, text.size() - 1)), ring);
    return {v, text.back() == '+'};
}

Interval parse_interval(const std::string& text, const RingPtr& ring) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "interval '" + text + "' must be lo,hi");
    RingElement lo = element_from_json(Json(text.substr(0, comma)), ring);
    RingElement hi = element_from_json(Json(text.substr(comma + 1)), ring);
    const Interval i{std::move(lo), std::move(hi)};
    if (i.empty()) throw Error(ErrorCode::ParseError, "empty interval '" + text + "'");
    return i;
}

// "lo,hi;lo,hi"
IntervalSet parse_set(const std::string& text, const RingPtr& ring) {
    std::vector<Interval> parts;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ';');) parts.push_back(parse_interval(tok, ring));
    return IntervalSet::from(parts);
}

RingPtr integer_ring(const std::vector<long>& ints) {
    std::vector<mpz_class> n(ints.begin(), ints.end());
    return RingSpec::multi_integer(n);
}

// lambda^k with the smallest k putting the value at or below 1/2
Slope at_most_half(const LambdaChoice& l) {
    const RingElement one = RingElement::one(l.ring);
    Slope s = l.slope;
    while (RingElement::slope_value(l.ring, s) * 2 > one) s = s * l.slope;
    return s;
}

Report purely_infinite_suite(const LambdaChoice& l, std::uint64_t seed) {
    Report rep{"purely-infinite", {}};
    const Slope s = at_most_half(l);
    fuzz::Engine g(seed);
    for (int n = 0; n < 100; ++n) {
        const IntervalSet A = fuzz::clopen(l.ring, g);
        const auto w = purely_infinite_witness(A, s);
        IntervalSet su, sv, ru, rv;
        for (const auto& b : w.U) su = su.unite(b.source), ru = ru.unite(b.range());
        for (const auto& b : w.V) sv = sv.unite(b.source), rv = rv.unite(b.range());
        const bool ok = su == A && sv == A && ru.disjoint(rv) && A.contains(ru) && A.contains(rv);
        rep.add("U, V witness on A = " + A.str(), ok);
    }
    return rep;
}

Report expansivity_suite(const LambdaChoice& l, std::uint64_t seed) {
    Report rep{"expansivity", {}};
    const RingElement lv = RingElement::slope_value(l.ring, l.slope);
    fuzz::Engine g(seed);
    while (rep.records.size() < 100) {
        const CantorPoint x = fuzz::point(l.ring, g), y = fuzz::point(l.ring, g);
        if (x == y) continue;
        const RingElement c = separate(x, y, lv);
        rep.add("separate " + x.str() + " " + y.str(), separation_holds(x, y, lv, c), "c' = " + c.str());
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stein's groups V(Gamma, Lambda, ell): invariants and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--approx", g_approx, "also print ring elements to 12 decimal digits");
    bool json = false;
    std::function<int()> run;

    // invariants
    auto* inv = app.add_subcommand("invariants", "homological invariants of a group spec");
    std::string inv_file;
    long degree = 4;
    inv->add_option("spec", inv_file, "group spec JSON file")->required();
    inv->add_option("--degree", degree, "top homological degree")->check(CLI::NonNegativeNumber);
    inv->add_flag("--json", json);
    inv->callback([&] {
        run = [&] {
            const GroupSpec s = group_spec_from_json(read_json_file(inv_file));
            const InvariantReport r = invariant_report(s.ring, s.ell, degree);
            if (json) {
                Json j = to_json(r);
                if (!s.label.empty()) j["label"] = s.label;
                print(j);
            } else {
                if (!s.label.empty()) std::cout << s.label << "\n";
                std::cout << render_text(r);
            }
            return 0;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite, lambda_text = "1/2";
    long max_i = 6;
    std::vector<long> integers{2, 3};
    ver->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"fi", "gi", "multigen", "conjugacy", "purely-infinite", "expansivity"}));
    ver->add_option("--lambda", lambda_text, "slope: a polynomial in t or p/q");
    ver->add_option("--max-i", max_i, "recursion depth for fi and gi")->check(CLI::PositiveNumber);
    ver->add_option("--integers", integers, "integer slopes, comma separated")->delimiter(',');
    ver->add_flag("--json", json);
    ver->callback([&] {
        run = [&] {
            Report rep{suite, {}};
            const std::uint64_t seed = fuzz::seed_from_env(20240601);
            if (suite == "fi" || suite == "gi") {
                const LambdaChoice l = parse_lambda(lambda_text);
                for (long i = 1; i <= max_i; ++i)
                    rep.append(suite == "fi" ? verify_fi(l.ring, l.slope, i) : verify_gi(l.ring, l.slope, i));
            } else if (suite == "multigen") {
                const RingPtr r = integer_ring(integers);
                Slope lam = Slope::identity(r->rank());
                lam.e[0] = -1;
                const RingElement lv = RingElement::slope_value(r, lam);
                for (long j = 0; j < 5; ++j) {
                    const RingElement alpha = lv.pow(4) * j;
                    rep.append(verify_multigen_step(r, lam, alpha, MultigenDirection::TimesLambda));
                    rep.append(verify_multigen_step(r, lam, alpha, MultigenDirection::DivLambda));
                }
            } else if (suite == "conjugacy") {
                rep = verify_conjugacy_generators(KGraph(integer_ring(integers)));
            } else if (suite == "purely-infinite") {
                rep = purely_infinite_suite(parse_lambda(lambda_text), seed);
            } else {
                rep = expansivity_suite(parse_lambda(lambda_text), seed);
            }
            return emit(rep, json);
        };
    });

    // compose
    auto* com = app.add_subcommand("compose", "compose elements, the rightmost applied first");
    std::vector<std::string> files;
    com->add_option("elements", files, "element JSON files")->required();
    com->callback([&] {
        run = [&] {
            VElement g = velement_from_json(read_json_file(files.front()));
            for (std::size_t i = 1; i < files.size(); ++i) g = compose(g, velement_from_json(read_json_file(files[i])));
            print(to_json(g));
            if (g_approx)
                for (const auto& s : g.segments()) std::cerr << show(Interval{s.a, s.b}) << "\n";
            return 0;
        };
    });

    // decompose
    auto* dec = app.add_subcommand("decompose", "split an element as (interval exchange) after (F)");
    std::string dec_file;
    dec->add_option("element", dec_file, "element JSON file")->required();
    dec->callback([&] {
        run = [&] {
            const auto [ie, f] = zappa_szep_decompose(velement_from_json(read_json_file(dec_file)));
            print(Json{{"ie", to_json(ie)}, {"f", to_json(f)}});
            return 0;
        };
    });

    // compare
    auto* cmp = app.add_subcommand("compare", "look for an invariant telling two groups apart");
    std::string a_file, b_file;
    cmp->add_option("specA", a_file)->required();
    cmp->add_option("specB", b_file)->required();
    cmp->add_flag("--json", json);
    cmp->callback([&] {
        run = [&] {
            const GroupSpec a = group_spec_from_json(read_json_file(a_file));
            const GroupSpec b = group_spec_from_json(read_json_file(b_file));
            const Verdict v = classify(a.ring, a.ell, b.ring, b.ell);
            if (json) print(to_json(v));
            else if (v.obstructed) std::cout << "Obstructed by " << v.invariant << ": " << v.reason << "\n";
            else std::cout << "NotDistinguished: " << v.reason << "\n";
            return v.obstructed ? 1 : 0;
        };
    });

    // kgraph
    auto* kg = app.add_subcommand("kgraph", "paths of the single-vertex k-graph");
    kg->require_subcommand(1);
    std::vector<long> kints{2, 3};
    kg->add_option("--integers", kints, "integer slopes, comma separated")->delimiter(',');
    auto* fac = kg->add_subcommand("factorize", "normal form and cylinder of a path");
    std::string path_text;
    fac->add_option("path", path_text, "comma separated label@n tokens")->required();
    fac->add_flag("--json", json);
    fac->callback([&] {
        run = [&] {
            const KGraph g(integer_ring(kints));
            const Path p = g.parse(path_text);
            const Path nf = g.normal_form(p);
            const Interval c = g.cylinder_interval(p);
            if (json) {
                print(Json{{"path", g.format(p)},
                           {"normalForm", g.format(nf)},
                           {"multidegree", g.multidegree(p)},
                           {"phi0", to_json(g.phi0(p))},
                           {"cylinder", to_json(c)}});
            } else {
                std::cout << "normal form  " << g.format(nf) << "\n"
                          << "phi0         " << show(g.phi0(p)) << "\n"
                          << "cylinder     " << show(c) << "\n";
            }
            return 0;
        };
    });
    auto* en = kg->add_subcommand("enumerate", "normal forms of a multidegree with their cylinders");
    std::vector<long> mdeg;
    en->add_option("--multidegree", mdeg, "edges per color, comma separated")->required()->delimiter(',');
    en->callback([&] {
        run = [&] {
            const KGraph g(integer_ring(kints));
            for (const auto& p : g.enumerate_paths(mdeg))
                std::cout << (p.edges.empty() ? "()" : g.format(p)) << "  " << show(g.cylinder_interval(p)) << "\n";
            return 0;
        };
    });

    // witnesses
    auto* wit = app.add_subcommand("witnesses", "dynamical witnesses in the Cantor model");
    wit->require_subcommand(1);
    std::string wl = "1/2";
    wit->add_option("--lambda", wl, "slope: a polynomial in t or p/q");
    auto* sep = wit->add_subcommand("separate", "translation separating two points");
    std::string x_text, y_text;
    sep->add_option("x", x_text, "point such as 1/3+ or t^2-")->required();
    sep->add_option("y", y_text)->required();
    sep->callback([&] {
        run = [&] {
            const LambdaChoice l = parse_lambda(wl);
            const RingElement lv = RingElement::slope_value(l.ring, l.slope);
            const CantorPoint x = parse_point(x_text, l.ring), y = parse_point(y_text, l.ring);
            const RingElement c = separate(x, y, lv);
            std::cout << "c'  " << show(c) << "\n";
            return separation_holds(x, y, lv, c) ? 0 : 1;
        };
    });
    auto* orb = wit->add_subcommand("orbit", "element moving a point into a cylinder");
    std::string target;
    orb->add_option("x", x_text)->required();
    orb->add_option("target", target, "interval lo,hi")->required();
    orb->callback([&] {
        run = [&] {
            const LambdaChoice l = parse_lambda(wl);
            const CantorPoint x = parse_point(x_text, l.ring);
            const Interval t = parse_interval(target, l.ring);
            const Affine g = orbit_witness(x, t);
            std::cout << "g     " << g.str() << "\n"
                      << "g(x)  " << g(x).str() << "\n";
            return t.contains(g(x)) ? 0 : 1;
        };
    });
    auto* pin = wit->add_subcommand("purely-infinite", "two bisections with disjoint ranges inside A");
    std::string set_text;
    pin->add_option("set", set_text, "clopen set lo,hi;lo,hi")->required();
    pin->callback([&] {
        run = [&] {
            const LambdaChoice l = parse_lambda(wl);
            const IntervalSet A = parse_set(set_text, l.ring);
            const auto w = purely_infinite_witness(A, at_most_half(l));
            Json j{{"U", Json::array()}, {"V", Json::array()}};
            for (const auto& b : w.U) j["U"].push_back(to_json(b));
            for (const auto& b : w.V) j["V"].push_back(to_json(b));
            print(j);
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
}
