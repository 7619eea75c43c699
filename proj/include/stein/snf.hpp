#pragma once

// Integer matrices, Smith normal form and cokernels.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace stein {

using ZVector = std::vector<mpz_class>;

class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ZMatrix identity(std::size_t n);
    static ZMatrix from_columns(std::size_t rows, const std::vector<ZVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZMatrix operator*(const ZMatrix& o) const;
    ZMatrix operator-(const ZMatrix& o) const;
    bool operator==(const ZMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// Fraction-free determinant.
mpz_class determinant(ZMatrix m);

// n-th exterior power in the basis of increasing n-subsets, entries n x n minors.
ZMatrix exterior_power(const ZMatrix& a, std::size_t n);

struct Smith {
    // U A V = diag(d_1, ..., d_r, 0, ...) with every d_i > 0. The d_i are not
    // reordered into a divisibility chain.
    std::vector<mpz_class> diagonal;
    std::size_t rows = 0;
    // U applied to each tracked vector
    std::vector<ZVector> tracked;

    std::size_t rank() const { return diagonal.size(); }
};

// Diagonalizes A by unimodular row and column operations. The row operations
// are also applied to the tracked vectors, which therefore come back in
// cokernel coordinates.
Smith smith(ZMatrix a, std::vector<ZVector> tracked = {});

// Invariant factors d_1 | d_2 | ... of the diagonal, ones dropped.
std::vector<mpz_class> invariant_factors(const std::vector<mpz_class>& diagonal);

std::size_t nullity(const ZMatrix& a);

}  // namespace stein
