#pragma once

// The Cantor model [0+, ell-]: bisections ((c, mu), source), dynamical
// witnesses, transpositions and the generating-set recursions.

#include "stein/affine.hpp"
#include "stein/pl.hpp"
#include "stein/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace stein {

struct Bisection {
    Affine g;
    IntervalSet source;

    IntervalSet range() const { return g(source); }
    PartialMap as_map() const { return PartialMap::single(g, source); }
    Bisection inverse() const { return {g.inverse(), range()}; }
};

// Range of b, RangeEscapes unless it lies in (0, ell].
IntervalSet apply(const Bisection& b, const RingElement& ell);

// Group elements grouped by affine map; sources tile (0, ell].
std::vector<Bisection> to_bisections(const VElement& g);
// NotAPartition unless sources and ranges both tile (0, ell].
VElement from_bisections(const std::vector<Bisection>& bs, const RingElement& ell);

// Fixed point c*mu/(1 - mu) inside [0, ell], if it lies in Gamma.
// IdentityElement for (0, 1).
std::optional<RingElement> fixed_point(const Affine& g, const RingElement& ell);

struct PurelyInfiniteWitness {
    std::vector<Bisection> U, V;
};
// EmptySet for empty A, LambdaTooLarge unless 0 < lambda <= 1/2.
PurelyInfiniteWitness purely_infinite_witness(const IntervalSet& A, const Slope& lambda);

// Some element of Gamma strictly between lo and hi.
RingElement element_between(const RingElement& lo, const RingElement& hi);

// c' such that t -> t - c' sends the smaller point into [0+, lambda-] and the
// larger into [lambda+, 1-]. EqualPoints when x == y.
RingElement separate(const CantorPoint& x, const CantorPoint& y, const RingElement& lambda);

// A translation moving x into the target cylinder.
Affine orbit_witness(const CantorPoint& x, const Interval& target);

// B u B^-1 u id elsewhere; OverlappingSourceRange if s(B) meets r(B).
VElement transposition(const Bisection& b, const RingElement& ell);
// B1 u B2 u (B2 B1)^-1 u id; needs r(B1) = s(B2) and s(B1), s(B2), r(B2)
// pairwise disjoint.
VElement three_cycle(const Bisection& b1, const Bisection& b2, const RingElement& ell);

// t -> t + alpha mod 1 on (0, 1]; OutOfRange unless 0 <= alpha < 1.
VElement rotation(const RingElement& alpha);

struct StandardGenerators {
    long K = 0;
    RingElement lambda;
    RingElement mu1;
    Bisection c;                // ((0, lambda), (0, 1])
    std::vector<VElement> f;    // f_1 .. f_K
    VElement g1;
};

// lambda given as a slope whose value lies in (0, 1).
long minimal_K(const RingElement& lambda);
StandardGenerators standard_generators(const RingPtr& ring, const Slope& lambda);
RingElement mu_sequence(const RingPtr& ring, const Slope& lambda, long i);

// Identities tying f_{i+1} to f_i, respectively g_{i+1} to g_i.
Report verify_fi(const RingPtr& ring, const Slope& lambda, long i);
Report verify_gi(const RingPtr& ring, const Slope& lambda, long i);

enum class MultigenDirection { TimesLambda, DivLambda };
// lambda is the new generator; alpha in [0, 1) resp. [0, lambda),
// else AlphaOutOfRange.
Report verify_multigen_step(const RingPtr& ring, const Slope& lambda, const RingElement& alpha,
                            MultigenDirection dir);

struct RestrictedGenerators {
    std::vector<PartialMap> S, E, Tplus, Tminus;
    std::vector<PartialMap> F;      // cover of U^c, sources disjoint, ranges in U
    std::vector<PartialMap> result; // S_U, empty pieces dropped
};
// CoverNotFound when words of length <= depth do not cover U^c.
RestrictedGenerators restrict_generators(const std::vector<PartialMap>& S, const IntervalSet& U,
                                         const RingElement& M, int depth);

// Expansivity check on one pair: separate() lands the points where it claims.
bool separation_holds(const CantorPoint& x, const CantorPoint& y, const RingElement& lambda,
                      const RingElement& c);

}  // namespace stein
