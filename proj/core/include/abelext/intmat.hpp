#pragma once

#include <cstdint>
#include <vector>

namespace abelext {

// Dense row-major integer matrix. All lattice computations in this library
// run on matrices with a handful of rows and columns, so entries are kept in
// int64_t with overflow checks on every product.
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    void append_row(const std::vector<std::int64_t>& row);
    auto operator<=>(const IntMat&) const = default;
};

std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t gcd64(std::int64_t x, std::int64_t y);
std::int64_t lcm64(std::int64_t x, std::int64_t y);

// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
// Requires the lattice to have full column rank (callers always include the
// modulus rows n_j e_j, which guarantees this). Returns a square upper
// triangular matrix with positive pivots and entries above each pivot
// reduced into [0, pivot).
IntMat hermite_normal_form(IntMat m);

// Diagonal of the Smith normal form of `m`, length min(rows, cols),
// with d_1 | d_2 | ... and all entries >= 0.
std::vector<std::int64_t> smith_diagonal(IntMat m);

// Solves x * H = v for an upper triangular H produced by
// hermite_normal_form. Returns false if v is not in the row lattice.
bool solve_upper_triangular(const IntMat& h, std::vector<std::int64_t> v,
                            std::vector<std::int64_t>& x);

}  // namespace abelext
