#include "stein/poly.hpp"

#include "stein/error.hpp"

#include <algorithm>
#include <cctype>

namespace stein {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

int degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly to_qpoly(const ZPoly& p) {
    QPoly q;
    q.reserve(p.size());
    for (const auto& c : p) q.emplace_back(c);
    return q;
}

mpq_class eval(const ZPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const ZPoly& p, const mpq_class& x) { return sgn(eval(p, x)); }

ZPoly derivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

QPoly rem(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    trim(r);
    const int db = degree(b);
    if (db < 0) throw Error(ErrorCode::IllDefined, "polynomial division by zero");
    while (degree(r) >= db) {
        const int dr = degree(r);
        mpq_class q = r[dr] / b[db];
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= q * b[i];
        r[dr] = 0;
        trim(r);
    }
    return r;
}

std::vector<QPoly> sturm_sequence(const ZPoly& f) {
    std::vector<QPoly> seq;
    QPoly p0 = to_qpoly(f);
    trim(p0);
    seq.push_back(p0);
    QPoly p1 = to_qpoly(derivative(f));
    if (degree(p1) < 0) return seq;
    seq.push_back(p1);
    while (true) {
        QPoly r = rem(seq[seq.size() - 2], seq.back());
        if (degree(r) < 0) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const mpq_class& x) {
    int count = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int count_roots(const std::vector<QPoly>& seq, const mpq_class& lo, const mpq_class& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

mpq_class cauchy_bound(const ZPoly& f) {
    const int d = degree(f);
    mpq_class m = 0;
    for (int i = 0; i < d; ++i) {
        mpq_class r = mpq_class(abs(f[i])) / abs(f[d]);
        if (r > m) m = r;
    }
    return m + 1;
}

namespace {

void isolate(const ZPoly& f, const std::vector<QPoly>& seq, mpq_class lo, mpq_class hi,
             std::vector<std::pair<mpq_class, mpq_class>>& out) {
    const int n = count_roots(seq, lo, hi);
    if (n == 0) return;
    if (n == 1 && sign_at(f, hi) != 0 && sign_at(f, lo) != 0) {
        out.emplace_back(lo, hi);
        return;
    }
    mpq_class mid = (lo + hi) / 2;
    // keep cut points off the roots so every window has nonzero endpoints
    mpq_class step = (hi - lo) / 7;
    while (sign_at(f, mid) == 0) {
        mid += step;
        step /= 3;
    }
    isolate(f, seq, lo, mid, out);
    isolate(f, seq, mid, hi, out);
}

}  // namespace

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& f) {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    if (degree(f) < 1) return out;
    const auto seq = sturm_sequence(f);
    mpq_class b = cauchy_bound(f);
    mpq_class lo = -b;
    mpq_class hi = b;
    isolate(f, seq, lo, hi, out);
    return out;
}

bool has_integer_root(const ZPoly& f) {
    const int d = degree(f);
    if (d < 1) return false;
    if (f[0] == 0) return true;
    mpz_class a0 = abs(f[0]);
    // rational roots of a monic integer polynomial are integer divisors of a0
    for (mpz_class q = 1; q * q <= a0; ++q) {
        if (a0 % q != 0) continue;
        for (const mpz_class& r : {q, mpz_class(a0 / q)}) {
            if (sign_at(f, mpq_class(r)) == 0 || sign_at(f, mpq_class(-r)) == 0) return true;
        }
    }
    return false;
}

ZPoly parse_polynomial(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
    ZPoly p;
    char var = 0;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, "polynomial '" + std::string(text) + "': " + why);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected + or -");
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        mpz_class coeff = 1;
        bool has_coeff = i > start;
        if (has_coeff) coeff = mpz_class(s.substr(start, i - start));
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) fail("dangling *");
            ++i;
        }
        unsigned long exp = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (var != 0 && s[i] != var) fail("more than one variable");
            var = s[i];
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t es = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es) fail("missing exponent");
                exp = std::stoul(s.substr(es, i - es));
            }
        } else if (!has_coeff) {
            fail("missing term");
        }
        if (exp > 4096) fail("exponent too large");
        if (p.size() <= exp) p.resize(exp + 1, 0);
        p[exp] += sign * coeff;
    }
    trim(p);
    return p;
}

std::string format_polynomial(const ZPoly& p, char var) {
    std::string out;
    for (int i = degree(p); i >= 0; --i) {
        if (p[i] == 0) continue;
        mpz_class c = p[i];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        mpz_class a = abs(c);
        if (i == 0 || a != 1) out += a.get_str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

mpq_class parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (k >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(k), t.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace stein
