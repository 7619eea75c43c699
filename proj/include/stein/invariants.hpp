#pragma once

// Homological invariants of the Cantor groupoid and of V(Gamma, Lambda, ell):
// H0 with its order unit, group homology of Gamma x| Z, groupoid homology,
// abelianizations, rational Poincare series and isomorphism obstructions.

#include "stein/ring.hpp"
#include "stein/snf.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace stein {

struct FinAbGroup {
    long free_rank = 0;
    std::vector<mpz_class> torsion;  // d1 | d2 | ..., all >= 2
    bool infinite_sum = false;       // Z^(infinity)

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup cyclic(const mpz_class& m);  // Z for m = 0
    // cokernel of a Z-linear map, columns are relations
    static FinAbGroup cokernel(const ZMatrix& relations);

    bool is_trivial() const { return free_rank == 0 && torsion.empty() && !infinite_sum; }
    bool is_finite() const { return free_rank == 0 && !infinite_sum; }
    mpz_class order() const;  // finite groups only
    FinAbGroup operator+(const FinAbGroup& o) const;
    FinAbGroup power(unsigned long k) const;
    FinAbGroup tensor_z2() const;
    bool operator==(const FinAbGroup& o) const = default;
    std::string str() const;
};

struct H0 {
    FinAbGroup group;
    mpz_class unit_class;
};

// Gamma / sum (1 - l_i) Gamma with the class of ell.
H0 h0(const RingPtr& ring, const RingElement& ell);
// The same from a finite presentation on Laurent monomials with exponents in
// [-window, window], reduced by Smith form. NotStabilized if window and
// window + 1 differ.
H0 h0_snf_oracle(const RingPtr& ring, const RingElement& ell, long window);

// Multiplication by the root of f on Z[x]/(f) in the basis 1, x, ..., x^(d-1).
ZMatrix companion_matrix(const ZPoly& f);
// H_n(Gamma x| Z) for Gamma = Z[l, 1/l]; DegreeOutOfRange for n < 0.
FinAbGroup gamma_semidirect_homology(const ZPoly& f, long n);

// Degrees 0 .. max_degree.
std::vector<FinAbGroup> groupoid_homology(const RingPtr& ring, long max_degree);
// The groupoid restricted to [0+, ell-]; degree 0 is taken from h0(ring, ell).
std::vector<FinAbGroup> groupoid_homology(const RingPtr& ring, const RingElement& ell, long max_degree);
// Highest degree that can be nonzero.
long homology_top_degree(const RingPtr& ring);

struct AHTerms {
    FinAbGroup h2, h0_tensor_z2, h1;
};

struct Abelianization {
    std::optional<FinAbGroup> group;  // empty when undetermined
    std::string rule;                  // which case produced the value
    bool conflict = false;
    std::string conflict_note;
    AHTerms terms;                     // H2 -> H0 (x) Z/2 -> V_ab -> H1 -> 0
};

Abelianization abelianization(const RingPtr& ring);

// An entry of a graded dimension list: a natural number or infinity.
struct Dim {
    long value = 0;
    bool infinite = false;

    static Dim inf() { return {0, true}; }
    Dim operator+(const Dim& o) const;
    Dim operator*(const Dim& o) const;
    bool is_zero() const { return !infinite && value == 0; }
    bool operator==(const Dim& o) const = default;
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// A generator degree together with how many generators sit there.
struct GradedGenerator {
    long degree = 1;
    Dim count{1, false};
};

// Coefficients of prod (1 + t^e) * prod 1/(1 - t^s) up to t^D.
std::vector<Dim> rational_poincare(const std::vector<long>& ext, const std::vector<long>& sym, long D);
std::vector<Dim> rational_poincare(const std::vector<GradedGenerator>& ext,
                                   const std::vector<GradedGenerator>& sym, long D);

// Rational groupoid homology dims split into exterior (odd degrees) and
// symmetric (even degrees >= 2) generators.
struct PoincareInput {
    std::vector<GradedGenerator> ext, sym;
};
PoincareInput poincare_generators(const std::vector<Dim>& groupoid_rational);
// Groupoid homology of a transcendental slope: Z^(infinity) in every degree.
std::vector<Dim> transcendental_groupoid_rational(long max_degree);
std::vector<Dim> rational_dims(const std::vector<FinAbGroup>& groups);

struct Verdict {
    bool obstructed = false;
    std::string invariant;  // "minimal polynomial", "H0", "unit class", "H_k"
    std::string reason;
};

Verdict classify(const RingPtr& a, const RingElement& ella, const RingPtr& b, const RingElement& ellb);

struct InvariantReport {
    std::string ring;
    std::string ell;
    H0 h0;
    Abelianization abelianization;
    std::vector<FinAbGroup> groupoid_homology;
    std::vector<Dim> rational_poincare;
    bool groupoid_acyclic = false;
    bool integrally_acyclic_known = false;  // group acyclicity decided
    bool integrally_acyclic = false;
    bool rationally_acyclic = false;
};

InvariantReport invariant_report(const RingPtr& ring, const RingElement& ell, long degree);
std::string render_text(const InvariantReport& r);

}  // namespace stein
