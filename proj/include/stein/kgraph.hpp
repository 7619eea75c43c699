#pragma once

// The single-vertex k-graph with n_i loops of color i, its paths, and the
// map phi0 onto the cylinders of [0+, 1-] over Z[1/(n1...nk)].

#include "stein/groupoid.hpp"
#include "stein/interval.hpp"
#include "stein/report.hpp"
#include "stein/ring.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stein {

struct Edge {
    std::size_t color = 0;  // index into the integer list
    long label = 0;         // 0 <= label < n_color
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

struct Path {
    std::vector<Edge> edges;
    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

class KGraph {
public:
    // InvalidSpec unless ring is MultiInteger.
    explicit KGraph(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    std::size_t colors() const { return n_.size(); }
    long n(std::size_t color) const { return n_[color]; }

    // LabelOutOfRange, OutOfRange for an unknown color
    Edge edge(std::size_t color, long label) const;
    std::vector<long> multidegree(const Path& p) const;

    // (a_k^(n_i), a_l^(n_j)) -> (a_k'^(n_j), a_l'^(n_i)) with
    // k/n_i + l/(n_i n_j) = k'/n_j + l'/(n_i n_j). SameColor for i = j.
    std::pair<Edge, Edge> commute(const Edge& first, const Edge& second) const;
    // colors ascending, adjacent swaps through commute
    Path normal_form(const Path& p) const;
    // every word reachable by commuting adjacent mixed pairs
    std::vector<Path> swap_closure(const Path& p) const;

    RingElement phi0(const Path& p) const;
    RingElement length(const Path& p) const;  // prod 1/n over the edges
    Interval cylinder_interval(const Path& p) const;

    // normal forms of the given multidegree; TooDeep past 4 per color
    std::vector<Path> enumerate_paths(const std::vector<long>& multidegree) const;

    // Z(lambda, mu) as a bisection sending the cylinder of lambda onto that of mu.
    Bisection bisection(const Path& lambda, const Path& mu) const;

    // "1@2,2@3": label@n, n one of the integers; ParseError, LabelOutOfRange
    Path parse(std::string_view text) const;
    std::string format(const Path& p) const;

private:
    RingPtr ring_;
    std::vector<long> n_;
};

// Both conjugacy displays for every color, compared as bisection sets.
Report verify_conjugacy_generators(const KGraph& g);

}  // namespace stein
