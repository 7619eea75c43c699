#pragma once

// Coefficient rings Gamma and slope groups Lambda.
//
// SingleAlgebraic: Gamma = Z[l, 1/l] with l a real root of a monic irreducible
// f, Lambda = <l>. An element is stored as l^s * p(l) with deg p < deg f and
// s chosen canonically (s = 0 when |f(0)| = 1, otherwise maximal).
// MultiInteger: Gamma = Z[1/(n1...nk)], Lambda = <n1,...,nk>, elements are
// rationals in lowest terms.

#include "stein/poly.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace stein {

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
public:
    enum class Kind { SingleAlgebraic, MultiInteger };

    // minpoly holds a0, ..., a_{d-1}, 1; the window (lo, hi) isolates the root.
    static RingPtr single_algebraic(ZPoly minpoly, mpq_class lo, mpq_class hi);
    static RingPtr multi_integer(std::vector<mpz_class> integers);

    Kind kind() const { return kind_; }
    bool is_single() const { return kind_ == Kind::SingleAlgebraic; }

    const ZPoly& minpoly() const { return f_; }
    int degree() const { return static_cast<int>(f_.size()) - 1; }
    const mpq_class& window_lo() const { return lo_; }
    const mpq_class& window_hi() const { return hi_; }
    bool irreducibility_assumed() const { return irreducibility_assumed_; }

    const std::vector<mpz_class>& integers() const { return ints_; }

    // Number of generators of Lambda.
    std::size_t rank() const { return kind_ == Kind::SingleAlgebraic ? 1 : ints_.size(); }

    // Same ring: same kind, same polynomial and root, or same integer list.
    bool same_as(const RingSpec& other) const;

    // Sign of p(root) for p already reduced (deg p < d).
    int sign_at_root(const ZPoly& p) const;
    int root_sign() const { return root_sign_; }
    // Dyadic approximation of the root, accurate to about 2^-256.
    mpq_class root_midpoint() const;

    // |a0| for SingleAlgebraic, n1*...*nk for MultiInteger. A denominator can
    // occur in Gamma only if all its primes divide this number.
    const mpz_class& denominator_base() const { return base_; }
    bool smooth(mpz_class den) const;

    std::string describe() const;

private:
    RingSpec() = default;

    Kind kind_ = Kind::MultiInteger;
    ZPoly f_;
    mpq_class lo_, hi_;
    bool irreducibility_assumed_ = false;
    std::vector<mpz_class> ints_;
    mpz_class base_ = 1;
    int root_sign_ = 1;

    // refined rational window around the root
    mpq_class rlo_, rhi_;
    struct Enclosure {
        unsigned long bits = 0;
        mpz_class L, H;  // root in [L/2^bits, H/2^bits], L*H > 0
        // min/max of x^j over the enclosure, scaled by 2^(bits*(d-1))
        std::vector<mpz_class> pmin, pmax;
    };
    Enclosure enc_;

    Enclosure enclose(unsigned long bits, mpq_class& lo, mpq_class& hi) const;
    static int sign_with(const Enclosure& e, const ZPoly& p);
};

struct Slope {
    std::vector<long> e;

    static Slope identity(std::size_t rank) { return Slope{std::vector<long>(rank, 0)}; }
    Slope operator*(const Slope& o) const;
    Slope inverse() const;
    Slope pow(long k) const;
    bool operator==(const Slope& o) const = default;
};

class RingElement {
public:
    static RingElement zero(RingPtr r);
    static RingElement one(RingPtr r);
    static RingElement integer(RingPtr r, const mpz_class& n);
    // NotInGamma when q is not an element of the ring.
    static RingElement rational(RingPtr r, const mpq_class& q);
    // SingleAlgebraic only: sum of c * t^e, reduced.
    static RingElement laurent(RingPtr r, const std::map<long, mpz_class>& terms);
    // l^shift * sum v_j l^j with rational v, if that lies in Gamma.
    static std::optional<RingElement> from_rational_coords(RingPtr r, long shift,
                                                           const std::vector<mpq_class>& v);
    static RingElement slope_value(RingPtr r, const Slope& s);
    // The generator of Lambda (SingleAlgebraic): l itself.
    static RingElement generator(RingPtr r, std::size_t i = 0);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const;
    int sign() const;
    mpz_class floor() const;
    double to_double() const;
    std::string approx(int digits = 12) const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement operator*(long k) const;

    // Exact quotient inside Gamma, if any.
    std::optional<RingElement> divide(const RingElement& o) const;
    // NotAUnit unless the inverse lies in Gamma.
    RingElement inverse() const;
    RingElement pow(long k) const;

    bool operator==(const RingElement& o) const;
    std::strong_ordering operator<=>(const RingElement& o) const;

    // SingleAlgebraic canonical data
    long shift() const { return shift_; }
    const ZPoly& coeffs() const { return coeffs_; }
    std::map<long, mpz_class> terms() const;
    // MultiInteger value (also available for degree-one SingleAlgebraic)
    mpq_class rational_value() const;

    // p(1) mod m; see eval_at_one_mod.
    mpz_class eval_at_one() const;

    std::string str() const;

private:
    explicit RingElement(RingPtr r) : ring_(std::move(r)) {}
    void normalize();
    void check_ring(const RingElement& o) const;

    RingPtr ring_;
    long shift_ = 0;
    ZPoly coeffs_;   // length d, SingleAlgebraic
    mpq_class q_;    // MultiInteger
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

// Canonical-form reduction of a Laurent polynomial, exposed for tests.
RingElement reduce(const std::map<long, mpz_class>& terms, const RingPtr& ring);

// Residue of x under Gamma -> Z/m with every generator sent to 1.
// IllDefined when the map does not exist (m = 0, m not dividing f(1), or some
// n_i not congruent to 1 mod m).
mpz_class eval_at_one_mod(const RingElement& x, const mpz_class& m);

// Exponent vector of x as an element of Lambda, searched in a bounded box.
std::optional<Slope> slope_of(const RingElement& x, long bound = 16);

}  // namespace stein
