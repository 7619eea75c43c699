#include "stein/ring.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace stein {

namespace {

constexpr unsigned long kInitialBits = 256;
constexpr unsigned long kMaxBits = 1ul << 16;

mpz_class pow2(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

mpz_class zpow(const mpz_class& b, unsigned long k) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), k);
    return r;
}

mpq_class qpow(const mpq_class& b, long k) {
    mpq_class r = 1;
    mpq_class base = k >= 0 ? b : mpq_class(1) / b;
    unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

mpz_class fdiv(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class cdiv(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// x -> l*x in Z[t]/(f), coefficient vector of length d
void mul_by_t(ZPoly& p, const ZPoly& f) {
    const std::size_t d = p.size();
    mpz_class carry = p[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) p[j] = p[j - 1];
    p[0] = 0;
    if (carry != 0)
        for (std::size_t j = 0; j < d; ++j) p[j] -= carry * f[j];
}

// x -> x/l, valid when a0 divides p0
void div_by_t(ZPoly& p, const ZPoly& f) {
    const std::size_t d = p.size();
    mpz_class q = p[0] / f[0];
    for (std::size_t j = 0; j + 1 < d; ++j) p[j] = p[j + 1] - q * f[j + 1];
    p[d - 1] = -q;
}

void mul_by_t(std::vector<mpq_class>& p, const ZPoly& f) {
    const std::size_t d = p.size();
    mpq_class carry = p[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) p[j] = p[j - 1];
    p[0] = 0;
    if (carry != 0)
        for (std::size_t j = 0; j < d; ++j) p[j] -= carry * f[j];
}

// reduce an arbitrary polynomial modulo the monic f to length d
ZPoly reduce_mod(ZPoly P, const ZPoly& f) {
    const std::size_t d = f.size() - 1;
    for (std::size_t i = P.size(); i-- > d;) {
        if (P[i] == 0) continue;
        mpz_class c = P[i];
        for (std::size_t j = 0; j < d; ++j) P[i - d + j] -= c * f[j];
        P[i] = 0;
    }
    P.resize(d, 0);
    return P;
}

bool all_zero(const ZPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const mpz_class& c) { return c == 0; });
}

}  // namespace

// ---------------------------------------------------------------- RingSpec

RingSpec::Enclosure RingSpec::enclose(unsigned long bits, mpq_class& lo, mpq_class& hi) const {
    const int sl = sign_at(f_, lo);
    mpq_class width = mpq_class(1, 1) / pow2(bits);
    Enclosure e;
    while (true) {
        while (hi - lo >= width) {
            mpq_class mid = (lo + hi) / 2;
            int sm = sign_at(f_, mid);
            if (sm == 0) {
                // rational root; only possible for degree one
                lo = mid - width / 4;
                hi = mid + width / 4;
                break;
            }
            if (sm == sl) lo = mid;
            else hi = mid;
        }
        mpz_class scale = pow2(bits);
        e.bits = bits;
        e.L = fdiv(lo * scale);
        e.H = cdiv(hi * scale);
        if (e.L * e.H > 0) break;
        ++bits;
        width /= 2;
    }
    const unsigned long D = static_cast<unsigned long>(std::max(degree() - 1, 0));
    e.pmin.resize(D + 1);
    e.pmax.resize(D + 1);
    for (unsigned long j = 0; j <= D; ++j) {
        mpz_class a = zpow(e.L, j) * pow2(bits * (D - j));
        mpz_class b = zpow(e.H, j) * pow2(bits * (D - j));
        e.pmin[j] = a < b ? a : b;
        e.pmax[j] = a < b ? b : a;
    }
    return e;
}

int RingSpec::sign_with(const Enclosure& e, const ZPoly& p) {
    mpz_class low = 0, high = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] >= 0) {
            low += p[j] * e.pmin[j];
            high += p[j] * e.pmax[j];
        } else {
            low += p[j] * e.pmax[j];
            high += p[j] * e.pmin[j];
        }
    }
    if (low > 0) return 1;
    if (high < 0) return -1;
    return 0;
}

RingPtr RingSpec::single_algebraic(ZPoly f, mpq_class lo, mpq_class hi) {
    trim(f);
    const int d = stein::degree(f);
    if (d < 1) throw Error(ErrorCode::InvalidSpec, "minimal polynomial must have degree >= 1");
    if (f[d] != 1) throw Error(ErrorCode::InvalidSpec, "minimal polynomial must be monic");
    if (f[0] == 0) throw Error(ErrorCode::InvalidSpec, "minimal polynomial has root 0");
    if (d == 1 && abs(f[0]) == 1) throw Error(ErrorCode::InvalidSpec, "root +-1 gives a trivial slope group");
    bool assumed = false;
    if (d >= 2 && has_integer_root(f)) throw Error(ErrorCode::InvalidSpec, "minimal polynomial is reducible");
    if (d >= 4) assumed = true;
    if (!(lo < hi)) throw Error(ErrorCode::InvalidSpec, "root window must satisfy lo < hi");
    if (sign_at(f, lo) == 0 || sign_at(f, hi) == 0)
        throw Error(ErrorCode::InvalidSpec, "root window endpoint is a root");
    const auto seq = sturm_sequence(f);
    if (count_roots(seq, lo, hi) != 1)
        throw Error(ErrorCode::InvalidSpec, "root window must contain exactly one real root");

    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->kind_ = Kind::SingleAlgebraic;
    spec->f_ = f;
    spec->lo_ = lo;
    spec->hi_ = hi;
    spec->irreducibility_assumed_ = assumed;
    spec->base_ = abs(f[0]);
    spec->rlo_ = lo;
    spec->rhi_ = hi;
    spec->enc_ = spec->enclose(kInitialBits, spec->rlo_, spec->rhi_);
    spec->root_sign_ = spec->enc_.L > 0 ? 1 : -1;
    return spec;
}

RingPtr RingSpec::multi_integer(std::vector<mpz_class> ints) {
    if (ints.empty()) throw Error(ErrorCode::InvalidSpec, "integer list is empty");
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (ints[i] < 2) throw Error(ErrorCode::InvalidSpec, "integers must be >= 2");
        for (std::size_t j = 0; j < i; ++j)
            if (ints[i] == ints[j]) throw Error(ErrorCode::InvalidSpec, "integers must be distinct");
    }
    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->kind_ = Kind::MultiInteger;
    spec->ints_ = std::move(ints);
    spec->base_ = 1;
    for (const auto& n : spec->ints_) spec->base_ *= n;
    return spec;
}

bool RingSpec::same_as(const RingSpec& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::MultiInteger) return ints_ == o.ints_;
    if (f_ != o.f_) return false;
    return rlo_ < o.rhi_ && o.rlo_ < rhi_;
}

int RingSpec::sign_at_root(const ZPoly& p) const {
    if (stein::degree(p) <= 0) return p.empty() ? 0 : sgn(p[0]);
    if (int s = sign_with(enc_, p)) return s;
    if (all_zero(p)) return 0;
    mpq_class lo = rlo_, hi = rhi_;
    for (unsigned long bits = 2 * enc_.bits; bits <= kMaxBits; bits *= 2) {
        Enclosure e = enclose(bits, lo, hi);
        if (int s = sign_with(e, p)) return s;
    }
    throw Error(ErrorCode::IllDefined, "sign undecided; minimal polynomial is probably reducible");
}

mpq_class RingSpec::root_midpoint() const {
    return mpq_class(enc_.L + enc_.H, pow2(enc_.bits + 1));
}

bool RingSpec::smooth(mpz_class den) const {
    den = abs(den);
    if (den == 1) return true;
    if (base_ == 1) return false;
    mpz_class g;
    while (true) {
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), base_.get_mpz_t());
        if (g == 1) break;
        den /= g;
    }
    return den == 1;
}

std::string RingSpec::describe() const {
    std::ostringstream os;
    if (kind_ == Kind::SingleAlgebraic) {
        os << "Z[l,1/l], l root of " << format_polynomial(f_) << " in (" << format_rational(lo_) << ", "
           << format_rational(hi_) << ")";
    } else {
        os << "Z[1/(";
        for (std::size_t i = 0; i < ints_.size(); ++i) os << (i ? "*" : "") << ints_[i];
        os << ")]";
    }
    return os.str();
}

// ---------------------------------------------------------------- Slope

Slope Slope::operator*(const Slope& o) const {
    Slope r = *this;
    if (r.e.size() != o.e.size()) throw Error(ErrorCode::SlopeNotInLambda, "slope rank mismatch");
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Slope Slope::inverse() const {
    Slope r = *this;
    for (auto& x : r.e) x = -x;
    return r;
}

Slope Slope::pow(long k) const {
    Slope r = *this;
    for (auto& x : r.e) x *= k;
    return r;
}

// ---------------------------------------------------------------- RingElement

void RingElement::normalize() {
    if (!ring_->is_single()) return;
    if (all_zero(coeffs_)) {
        shift_ = 0;
        return;
    }
    const ZPoly& f = ring_->minpoly();
    if (abs(f[0]) == 1) {
        for (; shift_ > 0; --shift_) mul_by_t(coeffs_, f);
        for (; shift_ < 0; ++shift_) div_by_t(coeffs_, f);
        return;
    }
    while (mpz_divisible_p(coeffs_[0].get_mpz_t(), f[0].get_mpz_t())) {
        div_by_t(coeffs_, f);
        ++shift_;
    }
}

void RingElement::check_ring(const RingElement& o) const {
    if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
        throw Error(ErrorCode::MismatchedSpec, "elements of different rings");
}

RingElement RingElement::zero(RingPtr r) {
    RingElement x(std::move(r));
    if (x.ring_->is_single()) x.coeffs_.assign(x.ring_->degree(), 0);
    else x.q_ = 0;
    return x;
}

RingElement RingElement::one(RingPtr r) { return integer(std::move(r), 1); }

RingElement RingElement::integer(RingPtr r, const mpz_class& n) {
    RingElement x = zero(std::move(r));
    if (x.ring_->is_single()) {
        x.coeffs_[0] = n;
        x.normalize();
    } else {
        x.q_ = n;
    }
    return x;
}

RingElement RingElement::rational(RingPtr r, const mpq_class& q0) {
    mpq_class q = q0;
    q.canonicalize();
    if (!r->is_single()) {
        if (!r->smooth(q.get_den()))
            throw Error(ErrorCode::NotInGamma, format_rational(q) + " is not in " + r->describe());
        RingElement x(std::move(r));
        x.q_ = q;
        return x;
    }
    std::vector<mpq_class> v(r->degree(), 0);
    v[0] = q;
    auto x = from_rational_coords(r, 0, v);
    if (!x) throw Error(ErrorCode::NotInGamma, format_rational(q) + " is not in " + r->describe());
    return *x;
}

RingElement RingElement::laurent(RingPtr r, const std::map<long, mpz_class>& terms) {
    if (!r->is_single()) throw Error(ErrorCode::MismatchedSpec, "Laurent form needs a single algebraic ring");
    RingElement x = zero(r);
    if (terms.empty()) return x;
    const long m = terms.begin()->first;
    const long top = terms.rbegin()->first;
    ZPoly P(static_cast<std::size_t>(top - m + 1), 0);
    for (const auto& [e, c] : terms) P[static_cast<std::size_t>(e - m)] += c;
    if (static_cast<long>(P.size()) < r->degree()) P.resize(r->degree(), 0);
    x.coeffs_ = reduce_mod(std::move(P), r->minpoly());
    x.shift_ = m;
    x.normalize();
    return x;
}

std::optional<RingElement> RingElement::from_rational_coords(RingPtr r, long shift,
                                                             const std::vector<mpq_class>& v) {
    if (!r->is_single()) {
        if (v.size() != 1) throw Error(ErrorCode::MismatchedSpec, "bad coordinate vector");
        mpq_class q = v[0];
        q.canonicalize();
        if (!r->smooth(q.get_den())) return std::nullopt;
        RingElement x(std::move(r));
        x.q_ = q;
        return x;
    }
    const ZPoly& f = r->minpoly();
    const std::size_t d = static_cast<std::size_t>(r->degree());
    if (v.size() != d) throw Error(ErrorCode::MismatchedSpec, "bad coordinate vector");
    auto integral = [](const std::vector<mpq_class>& w) {
        return std::all_of(w.begin(), w.end(), [](const mpq_class& c) { return c.get_den() == 1; });
    };
    auto build = [&](const std::vector<mpq_class>& w, long s) {
        RingElement x = zero(r);
        for (std::size_t j = 0; j < d; ++j) x.coeffs_[j] = w[j].get_num();
        x.shift_ = s;
        x.normalize();
        return x;
    };
    if (integral(v)) return build(v, shift);
    const mpz_class& a0 = r->denominator_base();
    if (a0 == 1) return std::nullopt;
    mpz_class D = 1;
    for (const auto& c : v) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den_mpz_t());
    if (!r->smooth(D)) return std::nullopt;
    // D | a0^e; the lattices l^-K Z[l] meet a0^-e Z[l] in a chain that can
    // grow at most e*d*log2|a0| times before it stabilizes
    unsigned long e = 0;
    for (mpz_class p = 1; !mpz_divisible_p(p.get_mpz_t(), D.get_mpz_t()); p *= a0) ++e;
    const unsigned long kmax = e * d * mpz_sizeinbase(a0.get_mpz_t(), 2) + 1;
    std::vector<mpq_class> w = v;
    for (unsigned long K = 1; K <= kmax; ++K) {
        mul_by_t(w, f);
        if (integral(w)) return build(w, shift - static_cast<long>(K));
    }
    return std::nullopt;
}

RingElement RingElement::slope_value(RingPtr r, const Slope& s) {
    if (s.e.size() != r->rank()) throw Error(ErrorCode::SlopeNotInLambda, "slope has wrong rank");
    if (r->is_single()) return laurent(r, {{s.e[0], 1}});
    mpq_class q = 1;
    const auto& n = r->integers();
    for (std::size_t i = 0; i < n.size(); ++i) q *= qpow(mpq_class(n[i]), s.e[i]);
    RingElement x(std::move(r));
    x.q_ = q;
    return x;
}

RingElement RingElement::generator(RingPtr r, std::size_t i) {
    Slope s = Slope::identity(r->rank());
    if (i >= s.e.size()) throw Error(ErrorCode::OutOfRange, "generator index");
    s.e[i] = 1;
    return slope_value(std::move(r), s);
}

bool RingElement::is_zero() const {
    return ring_->is_single() ? all_zero(coeffs_) : q_ == 0;
}

int RingElement::sign() const {
    if (!ring_->is_single()) return sgn(q_);
    int s = ring_->sign_at_root(coeffs_);
    if (ring_->root_sign() < 0 && (shift_ % 2 != 0)) s = -s;
    return s;
}

namespace {
mpq_class approx_value(const RingElement& x) {
    if (!x.ring()->is_single()) return x.rational_value();
    mpq_class m = x.ring()->root_midpoint();
    return qpow(m, x.shift()) * eval(x.coeffs(), m);
}
}  // namespace

mpz_class RingElement::floor() const {
    if (!ring_->is_single()) return fdiv(q_);
    mpz_class cand = fdiv(approx_value(*this));
    while (*this < integer(ring_, cand)) --cand;
    while (*this >= integer(ring_, cand + 1)) ++cand;
    return cand;
}

double RingElement::to_double() const { return approx_value(*this).get_d(); }

std::string RingElement::approx(int digits) const {
    mpq_class v = approx_value(*this);
    mpz_class scale = zpow(mpz_class(10), static_cast<unsigned long>(digits));
    mpq_class scaled = abs(v) * scale + mpq_class(1, 2);
    mpz_class n = fdiv(scaled);
    std::string s = n.get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (v < 0 && n != 0) s.insert(0, "-");
    return s;
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_ring(o);
    if (!ring_->is_single()) {
        RingElement x(ring_);
        x.q_ = q_ + o.q_;
        return x;
    }
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const ZPoly& f = ring_->minpoly();
    RingElement x(ring_);
    x.shift_ = std::min(shift_, o.shift_);
    ZPoly a = coeffs_, b = o.coeffs_;
    for (long k = shift_; k > x.shift_; --k) mul_by_t(a, f);
    for (long k = o.shift_; k > x.shift_; --k) mul_by_t(b, f);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    x.coeffs_ = std::move(a);
    x.normalize();
    return x;
}

RingElement RingElement::operator-() const {
    RingElement x = *this;
    if (ring_->is_single()) {
        for (auto& c : x.coeffs_) c = -c;
    } else {
        x.q_ = -q_;
    }
    return x;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    check_ring(o);
    RingElement x(ring_);
    if (!ring_->is_single()) {
        x.q_ = q_ * o.q_;
        return x;
    }
    const std::size_t d = coeffs_.size();
    ZPoly P(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) P[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    x.coeffs_ = reduce_mod(std::move(P), ring_->minpoly());
    x.shift_ = shift_ + o.shift_;
    x.normalize();
    return x;
}

RingElement RingElement::operator*(long k) const {
    RingElement x = *this;
    if (ring_->is_single()) {
        for (auto& c : x.coeffs_) c *= k;
        x.normalize();
    } else {
        x.q_ *= k;
    }
    return x;
}

std::optional<RingElement> RingElement::divide(const RingElement& o) const {
    check_ring(o);
    if (o.is_zero()) throw Error(ErrorCode::IllDefined, "division by zero");
    if (!ring_->is_single()) {
        mpq_class q = q_ / o.q_;
        if (!ring_->smooth(q.get_den())) return std::nullopt;
        RingElement x(ring_);
        x.q_ = q;
        return x;
    }
    const ZPoly& f = ring_->minpoly();
    const std::size_t d = coeffs_.size();
    // columns: o.coeffs * t^j mod f; solve M r = coeffs over Q
    std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d + 1));
    ZPoly col = o.coeffs_;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) M[i][j] = col[i];
        mul_by_t(col, f);
    }
    for (std::size_t i = 0; i < d; ++i) M[i][d] = coeffs_[i];
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && M[piv][c] == 0) ++piv;
        if (piv == d) throw Error(ErrorCode::IllDefined, "zero divisor; minimal polynomial is reducible");
        std::swap(M[piv], M[c]);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || M[i][c] == 0) continue;
            mpq_class t = M[i][c] / M[c][c];
            for (std::size_t k = c; k <= d; ++k) M[i][k] -= t * M[c][k];
        }
    }
    std::vector<mpq_class> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = M[i][d] / M[i][i];
    return from_rational_coords(ring_, shift_ - o.shift_, r);
}

RingElement RingElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::NotAUnit, "zero is not a unit");
    auto x = one(ring_).divide(*this);
    if (!x) throw Error(ErrorCode::NotAUnit, str() + " is not a unit");
    return *x;
}

RingElement RingElement::pow(long k) const {
    RingElement base = k >= 0 ? *this : inverse();
    unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
    RingElement r = one(ring_);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool RingElement::operator==(const RingElement& o) const {
    check_ring(o);
    if (!ring_->is_single()) return q_ == o.q_;
    return shift_ == o.shift_ && coeffs_ == o.coeffs_;
}

std::strong_ordering RingElement::operator<=>(const RingElement& o) const {
    check_ring(o);
    int s;
    if (!ring_->is_single()) {
        s = cmp(q_, o.q_);
    } else if (*this == o) {
        s = 0;
    } else {
        s = (*this - o).sign();
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::map<long, mpz_class> RingElement::terms() const {
    std::map<long, mpz_class> t;
    if (!ring_->is_single()) throw Error(ErrorCode::MismatchedSpec, "terms() needs a single algebraic ring");
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) t[shift_ + static_cast<long>(j)] = coeffs_[j];
    return t;
}

mpq_class RingElement::rational_value() const {
    if (!ring_->is_single()) return q_;
    if (ring_->degree() != 1) throw Error(ErrorCode::MismatchedSpec, "element is not rational");
    mpq_class l(-ring_->minpoly()[0]);
    return mpq_class(coeffs_[0]) * qpow(l, shift_);
}

mpz_class RingElement::eval_at_one() const {
    if (!ring_->is_single()) throw Error(ErrorCode::IllDefined, "eval_at_one needs a modulus for integer rings");
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

std::string RingElement::str() const {
    if (!ring_->is_single()) return format_rational(q_);
    if (is_zero()) return "0";
    std::string out;
    for (long j = static_cast<long>(coeffs_.size()) - 1; j >= 0; --j) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        const long e = shift_ + j;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        mpz_class a = abs(c);
        if (e == 0 || a != 1) out += a.get_str();
        if (e != 0) {
            if (a != 1) out += "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.str(); }

RingElement reduce(const std::map<long, mpz_class>& terms, const RingPtr& ring) {
    return RingElement::laurent(ring, terms);
}

mpz_class eval_at_one_mod(const RingElement& x, const mpz_class& m) {
    if (m <= 0) throw Error(ErrorCode::IllDefined, "modulus must be positive");
    const RingPtr& r = x.ring();
    mpz_class res;
    if (r->is_single()) {
        mpz_class f1 = 0;
        for (const auto& c : r->minpoly()) f1 += c;
        if (!mpz_divisible_p(f1.get_mpz_t(), m.get_mpz_t()))
            throw Error(ErrorCode::IllDefined, "modulus " + m.get_str() + " does not divide f(1) = " + f1.get_str());
        mpz_class v = x.eval_at_one();
        mpz_fdiv_r(res.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        return res;
    }
    for (const auto& n : r->integers()) {
        mpz_class n1 = n - 1;
        if (!mpz_divisible_p(n1.get_mpz_t(), m.get_mpz_t()))
            throw Error(ErrorCode::IllDefined, n.get_str() + " is not 1 mod " + m.get_str());
    }
    mpq_class q = x.rational_value();
    mpz_class den = q.get_den(), inv;
    if (m == 1) return 0;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorCode::IllDefined, "denominator not invertible mod " + m.get_str());
    mpz_class v = q.get_num() * inv;
    mpz_fdiv_r(res.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return res;
}

std::optional<Slope> slope_of(const RingElement& x, long bound) {
    const RingPtr& r = x.ring();
    if (x.sign() == 0) return std::nullopt;
    if (r->is_single()) {
        for (long k = 0; k <= bound; ++k) {
            for (long e : {k, -k}) {
                Slope s{{e}};
                if (RingElement::slope_value(r, s) == x) return s;
            }
        }
        return std::nullopt;
    }
    // peel every generator but the last off by search, then test the rest
    const auto& n = r->integers();
    const std::size_t k = n.size();
    mpq_class q = x.rational_value();
    if (q <= 0) return std::nullopt;
    Slope s = Slope::identity(k);
    std::vector<long> idx(k > 0 ? k - 1 : 0, -bound);
    while (true) {
        mpq_class rest = q;
        for (std::size_t i = 0; i + 1 < k; ++i) rest /= qpow(mpq_class(n[i]), idx[i]);
        long e = 0;
        mpq_class last(n[k - 1]);
        bool ok = true;
        while (rest.get_num() != rest.get_den()) {
            if (mpz_divisible_p(rest.get_num_mpz_t(), n[k - 1].get_mpz_t())) {
                rest /= last;
                ++e;
            } else if (mpz_divisible_p(rest.get_den_mpz_t(), n[k - 1].get_mpz_t())) {
                rest *= last;
                --e;
            } else {
                ok = false;
                break;
            }
            if (e > bound || e < -bound) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (std::size_t i = 0; i + 1 < k; ++i) s.e[i] = idx[i];
            s.e[k - 1] = e;
            return s;
        }
        std::size_t i = 0;
        while (i < idx.size() && idx[i] == bound) idx[i++] = -bound;
        if (i == idx.size()) return std::nullopt;
        ++idx[i];
    }
}

}  // namespace stein
