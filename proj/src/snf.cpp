#include "stein/snf.hpp"

#include <algorithm>
#include <utility>

namespace stein {

ZMatrix ZMatrix::identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
    ZMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

ZMatrix ZMatrix::operator-(const ZMatrix& o) const {
    ZMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ZMatrix ZMatrix::from_columns(std::size_t rows, const std::vector<ZVector>& cols) {
    ZMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

mpz_class determinant(ZMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < d; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

ZMatrix exterior_power(const ZMatrix& a, std::size_t n) {
    const auto idx = subsets(a.rows(), n);
    ZMatrix r(idx.size(), idx.size());
    for (std::size_t I = 0; I < idx.size(); ++I)
        for (std::size_t J = 0; J < idx.size(); ++J) {
            ZMatrix minor(n, n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) minor(p, q) = a(idx[I][p], idx[J][q]);
            r(I, J) = determinant(std::move(minor));
        }
    return r;
}

Smith smith(ZMatrix a, std::vector<ZVector> tracked) {
    const std::size_t m = a.rows(), n = a.cols();
    Smith out;
    out.rows = m;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (auto& v : tracked) std::swap(v[i], v[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    };
    // row i -= q * row t
    auto row_op = [&](std::size_t i, std::size_t t, const mpz_class& q, std::size_t from) {
        for (std::size_t c = from; c < n; ++c)
            if (a(t, c) != 0) a(i, c) -= q * a(t, c);
        for (auto& v : tracked) v[i] -= q * v[t];
    };
    auto col_op = [&](std::size_t j, std::size_t t, const mpz_class& q, std::size_t from) {
        for (std::size_t r = from; r < m; ++r)
            if (a(r, t) != 0) a(r, j) -= q * a(r, t);
    };

    mpz_class q;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                if (pi == m || cmpabs(a(i, j), a(pi, pj)) < 0) pi = i, pj = j;
                if (pi == i && pj == j && (a(i, j) == 1 || a(i, j) == -1)) goto found;
            }
    found:
        if (pi == m) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_op(i, t, q, t);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_op(j, t, q, t);
                if (a(t, j) != 0) clean = false;
            }
            if (clean) break;
            // a remainder smaller than the pivot is left in row or column t
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < m; ++i)
                if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
            for (std::size_t j = t + 1; j < n; ++j)
                if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
            swap_rows(t, bi);
            swap_cols(t, bj);
        }
        if (a(t, t) < 0) {
            for (std::size_t c = t; c < n; ++c) a(t, c) = -a(t, c);
            for (auto& v : tracked) v[t] = -v[t];
        }
        out.diagonal.push_back(a(t, t));
    }
    out.tracked = std::move(tracked);
    return out;
}

std::vector<mpz_class> invariant_factors(const std::vector<mpz_class>& diagonal) {
    std::vector<mpz_class> d;
    for (const auto& x : diagonal)
        if (abs(x) != 1) d.push_back(abs(x));
    mpz_class g, l;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
            d[i] = g;
            d[j] = l;
        }
    std::erase_if(d, [](const mpz_class& x) { return x == 1; });
    std::sort(d.begin(), d.end());
    return d;
}

std::size_t nullity(const ZMatrix& a) { return a.cols() - smith(a).rank(); }

}  // namespace stein
