#include "stein/invariants.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <sstream>

namespace stein {

FinAbGroup FinAbGroup::cyclic(const mpz_class& m) {
    FinAbGroup g;
    const mpz_class a = abs(m);
    if (a == 0) g.free_rank = 1;
    else if (a != 1) g.torsion.push_back(a);
    return g;
}

FinAbGroup FinAbGroup::cokernel(const ZMatrix& relations) {
    const Smith s = smith(relations);
    FinAbGroup g;
    g.free_rank = static_cast<long>(s.rows - s.rank());
    g.torsion = invariant_factors(s.diagonal);
    return g;
}

mpz_class FinAbGroup::order() const {
    if (!is_finite()) throw Error(ErrorCode::IllDefined, "order of an infinite group");
    mpz_class n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

FinAbGroup FinAbGroup::operator+(const FinAbGroup& o) const {
    FinAbGroup g;
    g.free_rank = free_rank + o.free_rank;
    g.infinite_sum = infinite_sum || o.infinite_sum;
    std::vector<mpz_class> t = torsion;
    t.insert(t.end(), o.torsion.begin(), o.torsion.end());
    g.torsion = invariant_factors(t);
    return g;
}

FinAbGroup FinAbGroup::power(unsigned long k) const {
    FinAbGroup g;
    for (unsigned long i = 0; i < k; ++i) g = g + *this;
    return g;
}

FinAbGroup FinAbGroup::tensor_z2() const {
    FinAbGroup g;
    g.infinite_sum = infinite_sum;
    long twos = free_rank;
    for (const auto& d : torsion)
        if (mpz_even_p(d.get_mpz_t())) ++twos;
    g.torsion.assign(twos, 2);
    return g;
}

std::string FinAbGroup::str() const {
    std::vector<std::string> parts;
    if (infinite_sum) parts.push_back("Z^inf");
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        const std::string z = "Z/" + torsion[i].get_str();
        parts.push_back(j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i));
        i = j;
    }
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

namespace {

mpz_class f_at_one(const ZPoly& f) {
    mpz_class s = 0;
    for (const auto& c : f) s += c;
    return s;
}

mpz_class integer_gcd(const RingPtr& ring) {
    mpz_class g = 0;
    for (const auto& n : ring->integers()) {
        const mpz_class m = n - 1;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
    return g;
}

mpz_class h0_modulus(const RingPtr& ring) {
    return ring->is_single() ? mpz_class(abs(f_at_one(ring->minpoly()))) : integer_gcd(ring);
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

struct Presentation {
    std::vector<ZVector> relations;
    ZVector ell, one;
};

Presentation single_presentation(const RingPtr& ring, const RingElement& ell, long w) {
    const ZPoly& f = ring->minpoly();
    const long d = ring->degree();
    const auto terms = ell.terms();
    for (const auto& [e, c] : terms) w = std::max(w, std::abs(e));
    const std::size_t n = static_cast<std::size_t>(2 * w + 1);
    auto at = [w](long e) { return static_cast<std::size_t>(e + w); };
    Presentation p;
    p.ell.assign(n, 0);
    p.one.assign(n, 0);
    for (const auto& [e, c] : terms) p.ell[at(e)] = c;
    p.one[at(0)] = 1;
    for (long e = -w; e < w; ++e) {
        ZVector v(n, 0);
        v[at(e)] = 1;
        v[at(e + 1)] = -1;
        p.relations.push_back(v);
    }
    for (long e = -w; e + d <= w; ++e) {
        ZVector v(n, 0);
        for (long i = 0; i <= d; ++i) v[at(e + i)] = f[i];
        p.relations.push_back(v);
    }
    return p;
}

Presentation multi_presentation(const RingPtr& ring, const RingElement& ell, long w) {
    const auto& ns = ring->integers();
    const std::size_t k = ns.size();
    // ell = c * (n1 ... nk)^(-B)
    const mpq_class q = ell.rational_value();
    long B = 0;
    mpz_class pw = 1;
    while (!mpz_divisible_p(pw.get_mpz_t(), q.get_den().get_mpz_t())) {
        pw *= ring->denominator_base();
        ++B;
    }
    const mpz_class c = q.get_num() * (pw / q.get_den());
    w = std::max(w, B);
    const long side = 2 * w + 1;
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= static_cast<std::size_t>(side);
    auto index = [&](const std::vector<long>& e) {
        std::size_t r = 0;
        for (std::size_t i = 0; i < k; ++i) r = r * side + static_cast<std::size_t>(e[i] + w);
        return r;
    };
    Presentation p;
    p.ell.assign(n, 0);
    p.one.assign(n, 0);
    p.ell[index(std::vector<long>(k, -B))] = c;
    p.one[index(std::vector<long>(k, 0))] = 1;
    std::vector<long> e(k, -w);
    for (std::size_t idx = 0; idx < n; ++idx) {
        for (std::size_t i = 0; i < k; ++i) {
            if (e[i] == w) continue;
            std::vector<long> up = e;
            ++up[i];
            // n_i * x_e = x_{e + d_i} and x_e = x_{e + d_i}
            ZVector v(n, 0);
            v[index(up)] = 1;
            v[index(e)] = -ns[i];
            p.relations.push_back(v);
            ZVector u(n, 0);
            u[index(e)] = 1;
            u[index(up)] = -1;
            p.relations.push_back(u);
        }
        for (std::size_t i = k; i-- > 0;) {
            if (++e[i] <= w) break;
            e[i] = -w;
        }
    }
    return p;
}

H0 oracle_at(const RingPtr& ring, const RingElement& ell, long w) {
    Presentation p = ring->is_single() ? single_presentation(ring, ell, w) : multi_presentation(ring, ell, w);
    const Smith s = smith(ZMatrix::from_columns(p.ell.size(), p.relations), {p.ell, p.one});
    H0 out;
    out.group.free_rank = static_cast<long>(s.rows - s.rank());
    out.group.torsion = invariant_factors(s.diagonal);
    if (!out.group.is_finite()) throw Error(ErrorCode::IllDefined, "presentation has a free part");
    const ZVector& x = s.tracked[0];
    const ZVector& one = s.tracked[1];
    // [ell] = k [1], k found by search; [1] generates
    const mpz_class order = out.group.order();
    for (mpz_class k = 0; k < order; ++k) {
        bool eq = true;
        for (std::size_t i = 0; i < s.rank() && eq; ++i) {
            mpz_class diff = x[i] - k * one[i];
            eq = mpz_divisible_p(diff.get_mpz_t(), s.diagonal[i].get_mpz_t());
        }
        for (std::size_t i = s.rank(); i < s.rows && eq; ++i) eq = x[i] == k * one[i];
        if (eq) {
            out.unit_class = k;
            return out;
        }
    }
    throw Error(ErrorCode::IllDefined, "class of ell is not a multiple of [1]");
}

}  // namespace

H0 h0(const RingPtr& ring, const RingElement& ell) {
    if (ell.sign() <= 0) throw Error(ErrorCode::OutOfRange, "ell must be positive");
    const mpz_class m = h0_modulus(ring);
    return {FinAbGroup::cyclic(m), eval_at_one_mod(ell, m)};
}

H0 h0_snf_oracle(const RingPtr& ring, const RingElement& ell, long window) {
    if (window < (ring->is_single() ? ring->degree() : 1))
        throw Error(ErrorCode::OutOfRange, "window " + std::to_string(window) + " is too small");
    const H0 a = oracle_at(ring, ell, window);
    const H0 b = oracle_at(ring, ell, window + 1);
    if (!(a.group == b.group) || a.unit_class != b.unit_class)
        throw Error(ErrorCode::NotStabilized, a.group.str() + " at window " + std::to_string(window) + ", " +
                                                  b.group.str() + " at window " + std::to_string(window + 1));
    return a;
}

ZMatrix companion_matrix(const ZPoly& f) {
    const std::size_t d = f.size() - 1;
    ZMatrix a(d, d);
    for (std::size_t j = 0; j + 1 < d; ++j) a(j + 1, j) = 1;
    for (std::size_t i = 0; i < d; ++i) a(i, d - 1) = -f[i];
    return a;
}

FinAbGroup gamma_semidirect_homology(const ZPoly& f, long n) {
    if (n < 0) throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(n));
    // H_n(Gamma) is the colimit of Lambda^n Z^d along B = Lambda^n A. The
    // maps of the system induce the identity on coker(B - I), so the
    // coinvariants are coker(B - I) at any one stage, and the invariants of
    // H_{n-1}(Gamma) are ker(B' - I) on one stage since B' is injective.
    const ZMatrix a = companion_matrix(f);
    const std::size_t d = a.rows();
    auto shifted = [&](long k) {
        ZMatrix b = exterior_power(a, static_cast<std::size_t>(k));
        return b - ZMatrix::identity(b.rows());
    };
    FinAbGroup g = FinAbGroup::cokernel(shifted(n));
    if (n >= 1 && static_cast<std::size_t>(n - 1) <= d) g.free_rank += static_cast<long>(nullity(shifted(n - 1)));
    return g;
}

long homology_top_degree(const RingPtr& ring) {
    return ring->is_single() ? ring->degree() : static_cast<long>(ring->integers().size()) - 1;
}

std::vector<FinAbGroup> groupoid_homology(const RingPtr& ring, long max_degree) {
    std::vector<FinAbGroup> out;
    const mpz_class m = h0_modulus(ring);
    for (long k = 0; k <= max_degree; ++k) {
        if (ring->is_single()) {
            out.push_back(k == 0 ? FinAbGroup::cyclic(m) : gamma_semidirect_homology(ring->minpoly(), k + 1));
        } else {
            const long top = homology_top_degree(ring);
            out.push_back(k <= top ? FinAbGroup::cyclic(m).power(binomial(top, k).get_ui()) : FinAbGroup{});
        }
    }
    return out;
}

std::vector<FinAbGroup> groupoid_homology(const RingPtr& ring, const RingElement& ell, long max_degree) {
    auto out = groupoid_homology(ring, max_degree);
    if (!out.empty()) out[0] = h0(ring, ell).group;
    return out;
}

Abelianization abelianization(const RingPtr& ring) {
    Abelianization ab;
    const auto h = groupoid_homology(ring, 2);
    ab.terms = {h[2], h[0].tensor_z2(), h[1]};
    const FinAbGroup z2 = FinAbGroup::cyclic(2);
    if (!ring->is_single()) {
        const mpz_class d = integer_gcd(ring);
        const std::size_t k = ring->integers().size();
        if (k == 1) {
            ab.rule = "single integer slope, f(1) = 1 - n";
            ab.group = mpz_even_p(d.get_mpz_t()) ? z2 : FinAbGroup{};
        } else if (mpz_odd_p(d.get_mpz_t())) {
            ab.rule = "integral slopes, d = gcd(n_i - 1) odd";
            ab.group = FinAbGroup::cyclic(d).power(k - 1);
        } else {
            ab.rule = "integral slopes, d even: boundary map H2 -> H0 (x) Z/2 undetermined";
        }
        return ab;
    }
    const ZPoly& f = ring->minpoly();
    const int d = ring->degree();
    const mpz_class f1 = f_at_one(f);
    const bool even = mpz_even_p(f1.get_mpz_t());
    if (d == 1) {
        ab.rule = "d = 1";
        ab.group = even ? z2 : FinAbGroup{};
    } else if (d == 2 && f[0] == 1 && mpz_odd_p(f[1].get_mpz_t())) {
        ab.rule = "d = 2, a0 = 1, a1 odd";
        ab.group = FinAbGroup::cyclic(0);
    } else if (d == 2 && f[0] != 1) {
        ab.rule = "d = 2, a0 != 1";
        const FinAbGroup base = FinAbGroup::cyclic(1 + f[0]);
        ab.group = even ? z2 + base : base;
        if (f[0] == -1) {
            ab.conflict = true;
            ab.conflict_note = "Z/(1 + a0) = Z here, while V_ab = Z/2 is known for t^2+t-1; "
                               "H1 of the groupoid is " + ab.terms.h1.str();
        }
    } else if (d == 3 && f[0] == -1 && mpz_odd_p(mpz_class(f[1] + f[2]).get_mpz_t())) {
        ab.rule = "d = 3, a0 = -1, a1 + a2 odd";
        ab.group = FinAbGroup::cyclic(f[1] + f[2]);
    } else {
        ab.rule = "not covered by the low degree table";
    }
    return ab;
}

Dim Dim::operator+(const Dim& o) const {
    if (infinite || o.infinite) return inf();
    return {value + o.value, false};
}

Dim Dim::operator*(const Dim& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (infinite || o.infinite) return inf();
    return {value * o.value, false};
}

namespace {

using Series = std::vector<Dim>;

Series multiply(const Series& a, const Series& b) {
    Series c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    }
    return c;
}

Series factor(const GradedGenerator& g, bool exterior, long D) {
    if (g.degree < 1) throw Error(ErrorCode::DegreeOutOfRange, "generator degree " + std::to_string(g.degree));
    Series s(D + 1);
    s[0] = {1, false};
    for (long i = 1; g.degree * i <= D; ++i) {
        Dim c;
        if (g.count.infinite) c = Dim::inf();
        else if (exterior) c = {static_cast<long>(binomial(g.count.value, i).get_si()), false};
        else c = {static_cast<long>(binomial(g.count.value + i - 1, i).get_si()), false};
        s[g.degree * i] = c;
    }
    return s;
}

}  // namespace

std::vector<Dim> rational_poincare(const std::vector<GradedGenerator>& ext,
                                   const std::vector<GradedGenerator>& sym, long D) {
    if (D < 0) throw Error(ErrorCode::DegreeOutOfRange, "D = " + std::to_string(D));
    Series s(D + 1);
    s[0] = {1, false};
    for (const auto& g : ext)
        if (!g.count.is_zero()) s = multiply(s, factor(g, true, D));
    for (const auto& g : sym)
        if (!g.count.is_zero()) s = multiply(s, factor(g, false, D));
    return s;
}

std::vector<Dim> rational_poincare(const std::vector<long>& ext, const std::vector<long>& sym, long D) {
    std::vector<GradedGenerator> e, s;
    for (long x : ext) e.push_back({x, {1, false}});
    for (long x : sym) s.push_back({x, {1, false}});
    return rational_poincare(e, s, D);
}

PoincareInput poincare_generators(const std::vector<Dim>& groupoid_rational) {
    PoincareInput in;
    for (std::size_t k = 1; k < groupoid_rational.size(); ++k) {
        const Dim& h = groupoid_rational[k];
        if (h.is_zero()) continue;
        (k % 2 ? in.ext : in.sym).push_back({static_cast<long>(k), h});
    }
    return in;
}

std::vector<Dim> transcendental_groupoid_rational(long max_degree) {
    return std::vector<Dim>(max_degree + 1, Dim::inf());
}

std::vector<Dim> rational_dims(const std::vector<FinAbGroup>& groups) {
    std::vector<Dim> out;
    for (const auto& g : groups) out.push_back(g.infinite_sum ? Dim::inf() : Dim{g.free_rank, false});
    return out;
}

namespace {

bool same_minpoly(const ZPoly& f, const ZPoly& g) {
    if (f == g) return true;
    // l and 1/l generate the same ring and slope group
    if (f.size() != g.size() || abs(f[0]) != 1) return false;
    ZPoly r(f.rbegin(), f.rend());
    if (f[0] == -1)
        for (auto& c : r) c = -c;
    return r == g;
}

}  // namespace

Verdict classify(const RingPtr& a, const RingElement& ella, const RingPtr& b, const RingElement& ellb) {
    if (a->is_single() && b->is_single() && a->degree() <= 2 && b->degree() <= 2 &&
        !same_minpoly(a->minpoly(), b->minpoly()))
        return {true, "minimal polynomial",
                "minimal polynomials differ: " + format_polynomial(a->minpoly()) + " vs " +
                    format_polynomial(b->minpoly())};
    const H0 ha = h0(a, ella), hb = h0(b, ellb);
    if (!(ha.group == hb.group)) return {true, "H0", "H0 differs: " + ha.group.str() + " vs " + hb.group.str()};
    if (ha.group.is_finite()) {
        // an automorphism of Z/m moves the class within its gcd with m
        const mpz_class m = ha.group.order();
        mpz_class ga, gb;
        mpz_gcd(ga.get_mpz_t(), ha.unit_class.get_mpz_t(), m.get_mpz_t());
        mpz_gcd(gb.get_mpz_t(), hb.unit_class.get_mpz_t(), m.get_mpz_t());
        if (ga != gb)
            return {true, "unit class",
                    "unit classes " + ha.unit_class.get_str() + " != " + hb.unit_class.get_str() + " in " +
                        ha.group.str() + " (gcd with the order: " + ga.get_str() + " vs " + gb.get_str() + ")"};
    }
    const long top = std::max(homology_top_degree(a), homology_top_degree(b));
    const auto xa = groupoid_homology(a, top), xb = groupoid_homology(b, top);
    for (long k = 1; k <= top; ++k)
        if (!(xa[k] == xb[k]))
            return {true, "H_" + std::to_string(k),
                    "groupoid H_" + std::to_string(k) + " differs: " + xa[k].str() + " vs " + xb[k].str()};
    return {false, "", "not distinguished by H0, unit class or groupoid homology"};
}

InvariantReport invariant_report(const RingPtr& ring, const RingElement& ell, long degree) {
    if (degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(degree));
    InvariantReport r;
    r.ring = ring->describe();
    r.ell = ell.str();
    r.h0 = h0(ring, ell);
    r.abelianization = abelianization(ring);
    const long top = homology_top_degree(ring);
    const auto full = groupoid_homology(ring, std::max(degree, top));
    r.groupoid_homology.assign(full.begin(), full.begin() + degree + 1);
    r.groupoid_acyclic = std::all_of(full.begin(), full.end(), [](const FinAbGroup& g) { return g.is_trivial(); });
    const PoincareInput in = poincare_generators(rational_dims(full));
    r.rational_poincare = rational_poincare(in.ext, in.sym, degree);
    r.rationally_acyclic = in.ext.empty() && in.sym.empty();
    if (r.groupoid_acyclic) {
        r.integrally_acyclic_known = true;
        r.integrally_acyclic = true;
    } else if (!r.h0.group.is_trivial() && !ring->is_single()) {
        r.integrally_acyclic_known = true;
    } else if (r.abelianization.group && !r.abelianization.group->is_trivial()) {
        r.integrally_acyclic_known = true;
    }
    return r;
}

std::string render_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "ring                 " << r.ring << "\n";
    os << "ell                  " << r.ell << "\n";
    os << "H0                   " << r.h0.group.str() << "\n";
    os << "unit class           " << r.h0.unit_class << "\n";
    os << "V_ab                 " << (r.abelianization.group ? r.abelianization.group->str() : "unknown") << "  ["
       << r.abelianization.rule << "]\n";
    if (!r.abelianization.group || r.abelianization.conflict) {
        const auto& t = r.abelianization.terms;
        os << "  exact sequence     " << t.h2.str() << " -> " << t.h0_tensor_z2.str() << " -> V_ab -> " << t.h1.str()
           << " -> 0\n";
    }
    if (r.abelianization.conflict) os << "  conflict           " << r.abelianization.conflict_note << "\n";
    for (std::size_t k = 0; k < r.groupoid_homology.size(); ++k)
        os << "groupoid H_" << k << (k < 10 ? "         " : "        ") << r.groupoid_homology[k].str() << "\n";
    os << "rational Poincare   ";
    for (const auto& d : r.rational_poincare) os << " " << d.str();
    os << "\n";
    os << "groupoid acyclic     " << (r.groupoid_acyclic ? "yes" : "no") << "\n";
    os << "integrally acyclic   "
       << (r.integrally_acyclic_known ? (r.integrally_acyclic ? "yes" : "no") : "undetermined") << "\n";
    os << "rationally acyclic   " << (r.rationally_acyclic ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace stein
