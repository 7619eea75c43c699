#pragma once

// Dense univariate polynomials over Z and Q, coefficient vectors stored
// lowest degree first.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stein {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p);
void trim(QPoly& p);
int degree(const ZPoly& p);
int degree(const QPoly& p);

QPoly to_qpoly(const ZPoly& p);
mpq_class eval(const ZPoly& p, const mpq_class& x);
mpq_class eval(const QPoly& p, const mpq_class& x);
int sign_at(const ZPoly& p, const mpq_class& x);

ZPoly derivative(const ZPoly& p);
QPoly rem(const QPoly& a, const QPoly& b);

// Sturm chain f, f', -rem(...), ...
std::vector<QPoly> sturm_sequence(const ZPoly& f);
int sign_variations(const std::vector<QPoly>& seq, const mpq_class& x);
// Distinct real roots in (lo, hi].
int count_roots(const std::vector<QPoly>& seq, const mpq_class& lo, const mpq_class& hi);

// Cauchy bound: every real root has |x| < cauchy_bound(f).
mpq_class cauchy_bound(const ZPoly& f);

// Windows (lo, hi) each holding exactly one real root, with f(lo), f(hi) != 0,
// sorted ascending. f must be squarefree.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& f);

bool has_integer_root(const ZPoly& f);

// "t^2+t-1", "2t^3 - t + 5", "t-3"; variable is any single letter.
ZPoly parse_polynomial(std::string_view text);
std::string format_polynomial(const ZPoly& p, char var = 't');

mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& q);

}  // namespace stein
