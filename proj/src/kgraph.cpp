#include "stein/kgraph.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace stein {

KGraph::KGraph(RingPtr ring) : ring_(std::move(ring)) {
    if (ring_->is_single()) throw Error(ErrorCode::InvalidSpec, "a k-graph needs integer slopes");
    for (const auto& n : ring_->integers()) n_.push_back(n.get_si());
}

Edge KGraph::edge(std::size_t color, long label) const {
    if (color >= n_.size()) throw Error(ErrorCode::OutOfRange, "no color " + std::to_string(color));
    if (label < 0 || label >= n_[color])
        throw Error(ErrorCode::LabelOutOfRange, "label " + std::to_string(label) + " for n = " + std::to_string(n_[color]));
    return {color, label};
}

std::vector<long> KGraph::multidegree(const Path& p) const {
    std::vector<long> m(n_.size(), 0);
    for (const auto& e : p.edges) ++m.at(e.color);
    return m;
}

std::pair<Edge, Edge> KGraph::commute(const Edge& first, const Edge& second) const {
    if (first.color == second.color) throw Error(ErrorCode::SameColor, "both edges have color " + std::to_string(first.color));
    edge(first.color, first.label);
    edge(second.color, second.label);
    const long ni = n_[first.color], nj = n_[second.color];
    const long v = first.label * nj + second.label;  // value times n_i n_j
    return {{second.color, v / ni}, {first.color, v % ni}};
}

Path KGraph::normal_form(const Path& p) const {
    Path w = p;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.edges.size(); ++i) {
            if (w.edges[i].color <= w.edges[i + 1].color) continue;
            std::tie(w.edges[i], w.edges[i + 1]) = commute(w.edges[i], w.edges[i + 1]);
            moved = true;
        }
    }
    return w;
}

std::vector<Path> KGraph::swap_closure(const Path& p) const {
    std::set<Path> seen{p};
    std::deque<Path> todo{p};
    while (!todo.empty()) {
        Path w = todo.front();
        todo.pop_front();
        for (std::size_t i = 0; i + 1 < w.edges.size(); ++i) {
            if (w.edges[i].color == w.edges[i + 1].color) continue;
            Path v = w;
            std::tie(v.edges[i], v.edges[i + 1]) = commute(w.edges[i], w.edges[i + 1]);
            if (seen.insert(v).second) todo.push_back(v);
        }
    }
    return {seen.begin(), seen.end()};
}

RingElement KGraph::phi0(const Path& p) const {
    mpq_class t = 0;
    for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) t = (t + it->label) / n_[it->color];
    t.canonicalize();
    return RingElement::rational(ring_, t);
}

RingElement KGraph::length(const Path& p) const {
    mpq_class t = 1;
    for (const auto& e : p.edges) t /= n_[e.color];
    t.canonicalize();
    return RingElement::rational(ring_, t);
}

Interval KGraph::cylinder_interval(const Path& p) const {
    const RingElement a = phi0(p);
    return {a, a + length(p)};
}

std::vector<Path> KGraph::enumerate_paths(const std::vector<long>& m) const {
    if (m.size() != n_.size()) throw Error(ErrorCode::OutOfRange, "multidegree has the wrong number of entries");
    std::vector<std::size_t> colors;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw Error(ErrorCode::OutOfRange, "negative multidegree");
        if (m[i] > 4) throw Error(ErrorCode::TooDeep, "entry " + std::to_string(m[i]) + " exceeds 4");
        colors.insert(colors.end(), static_cast<std::size_t>(m[i]), i);
    }
    std::vector<Path> out;
    Path cur;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == colors.size()) {
            out.push_back(cur);
            return;
        }
        for (long l = 0; l < n_[colors[pos]]; ++l) {
            cur.edges.push_back({colors[pos], l});
            self(self, pos + 1);
            cur.edges.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Bisection KGraph::bisection(const Path& lambda, const Path& mu) const {
    const auto ml = multidegree(lambda), mm = multidegree(mu);
    Slope s = Slope::identity(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) s.e[i] = ml[i] - mm[i];
    const RingElement sv = RingElement::slope_value(ring_, s);
    // t -> phi0(mu) + s (t - phi0(lambda))
    const RingElement c = *phi0(mu).divide(sv) - phi0(lambda);
    return {Affine(c, s), IntervalSet(cylinder_interval(lambda))};
}

Path KGraph::parse(std::string_view text) const {
    Path p;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return p;
    auto number = [&](std::string_view s) {
        s = trim(s);
        long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "'");
        return v;
    };
    while (true) {
        const std::size_t comma = text.find(',');
        const std::string_view tok = text.substr(0, comma);
        const std::size_t at = tok.find('@');
        if (at == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected label@n in '" + std::string(tok) + "'");
        const long label = number(tok.substr(0, at));
        const long n = number(tok.substr(at + 1));
        auto it = std::find(n_.begin(), n_.end(), n);
        if (it == n_.end()) throw Error(ErrorCode::ParseError, std::to_string(n) + " is not one of the integers");
        p.edges.push_back(edge(static_cast<std::size_t>(it - n_.begin()), label));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return p;
}

std::string KGraph::format(const Path& p) const {
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i)
        s += (i ? "," : "") + std::to_string(p.edges[i].label) + "@" + std::to_string(n_[p.edges[i].color]);
    return s;
}

namespace {

// one bisection per affine map, sources united
std::vector<Bisection> grouped(const std::vector<Bisection>& bs) {
    std::vector<Bisection> out;
    for (const auto& b : bs) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Bisection& o) { return o.g == b.g; });
        if (it == out.end()) out.push_back(b);
        else it->source = it->source.unite(b.source);
    }
    return out;
}

bool same_set(const std::vector<Bisection>& a, const std::vector<Bisection>& b) {
    const auto x = grouped(a), y = grouped(b);
    if (x.size() != y.size()) return false;
    for (const auto& p : x)
        if (std::none_of(y.begin(), y.end(), [&](const Bisection& q) { return q.g == p.g && q.source == p.source; }))
            return false;
    return true;
}

std::string text(const std::vector<Bisection>& bs) {
    std::string s;
    for (const auto& b : grouped(bs)) s += (s.empty() ? "" : " u ") + b.g.str() + " on " + b.source.str();
    return s;
}

}  // namespace

Report verify_conjugacy_generators(const KGraph& g) {
    Report rep{"conjugacy", {}};
    const RingPtr& r = g.ring();
    const RingElement zero = RingElement::zero(r), one = RingElement::one(r);
    for (std::size_t i = 0; i < g.colors(); ++i) {
        const long n = g.n(i);
        const std::string tag = "n = " + std::to_string(n);
        const RingElement inv = RingElement::rational(r, mpq_class(1, n));
        Slope down = Slope::identity(g.colors());
        down.e[i] = -1;

        const std::vector<Bisection> lhs1{g.bisection(Path{}, Path{{g.edge(i, 0)}})};
        const std::vector<Bisection> rhs1{{Affine(zero, down), IntervalSet(Interval{zero, one})}};
        rep.add("Z(empty, a_0) = ((0, 1/n), [0+, 1-]), " + tag, same_set(lhs1, rhs1), text(lhs1));

        std::vector<Bisection> lhs2{g.bisection(Path{{g.edge(i, n - 1)}}, Path{{g.edge(i, 0)}})};
        for (long l = 0; l + 1 < n; ++l) lhs2.push_back(g.bisection(Path{{g.edge(i, l)}}, Path{{g.edge(i, l + 1)}}));
        const Slope id = Slope::identity(g.colors());
        const std::vector<Bisection> rhs2{{Affine(inv - one, id), IntervalSet(Interval{one - inv, one})},
                                          {Affine(inv, id), IntervalSet(Interval{zero, one - inv})}};
        rep.add("Z(a_{n-1}, a_0) u Z(a_l, a_{l+1}) = rotation pieces, " + tag, same_set(lhs2, rhs2), text(lhs2));

        bool rotation_ok = false;
        try {
            rotation_ok = from_bisections(lhs2, one) == rotation(inv);
        } catch (const Error&) {
        }
        rep.add("second display is the rotation by 1/n, " + tag, rotation_ok);
    }
    return rep;
}

}  // namespace stein
