#include "abelext/intmat.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace abelext {

void IntMat::append_row(const std::vector<std::int64_t>& row) {
    if (row.size() != cols) throw std::invalid_argument("row length mismatch");
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    __int128 p = static_cast<__int128>(x) * y;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("integer matrix overflow");
    return static_cast<std::int64_t>(p);
}

std::int64_t gcd64(std::int64_t x, std::int64_t y) {
    return std::gcd(x, y);
}

std::int64_t lcm64(std::int64_t x, std::int64_t y) {
    if (x == 0 || y == 0) return 0;
    return checked_mul(x / std::gcd(x, y), y);
}

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}

// row_i -= q * row_j
void row_axpy(IntMat& m, std::size_t i, std::size_t j, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < m.cols; ++k)
        m.at(i, k) -= checked_mul(q, m.at(j, k));
}

void col_axpy(IntMat& m, std::size_t i, std::size_t j, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < m.rows; ++k)
        m.at(k, i) -= checked_mul(q, m.at(k, j));
}

}  // namespace

IntMat hermite_normal_form(IntMat m) {
    const std::size_t n = m.cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < m.rows; ++col) {
        // gcd all entries of this column below pivot_row into one row
        while (true) {
            std::size_t best = m.rows;
            for (std::size_t i = pivot_row; i < m.rows; ++i) {
                if (m.at(i, col) == 0) continue;
                if (best == m.rows ||
                    std::llabs(m.at(i, col)) < std::llabs(m.at(best, col)))
                    best = i;
            }
            if (best == m.rows) break;  // column is zero below pivot
            swap_rows(m, pivot_row, best);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < m.rows; ++i) {
                std::int64_t q = m.at(i, col) / m.at(pivot_row, col);
                row_axpy(m, i, pivot_row, q);
                if (m.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot_row < m.rows && m.at(pivot_row, col) != 0) {
            if (m.at(pivot_row, col) < 0)
                for (std::size_t k = 0; k < n; ++k) m.at(pivot_row, k) = -m.at(pivot_row, k);
            ++pivot_row;
        }
    }
    if (pivot_row < n) throw std::invalid_argument("lattice does not have full column rank");

    IntMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) = m.at(i, j);
    // reduce entries above each pivot
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t piv = h.at(j, j);
        for (std::size_t i = 0; i < j; ++i) {
            std::int64_t q = h.at(i, j) / piv;
            if (h.at(i, j) - checked_mul(q, piv) < 0) --q;
            row_axpy(h, i, j, q);
        }
    }
    return h;
}

std::vector<std::int64_t> smith_diagonal(IntMat m) {
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // locate minimal nonzero entry in the lower-right submatrix
            std::size_t bi = m.rows, bj = m.cols;
            for (std::size_t i = t; i < m.rows; ++i)
                for (std::size_t j = t; j < m.cols; ++j) {
                    if (m.at(i, j) == 0) continue;
                    if (bi == m.rows ||
                        std::llabs(m.at(i, j)) < std::llabs(m.at(bi, bj))) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m.rows) goto done_pivot;  // submatrix is zero
            swap_rows(m, t, bi);
            swap_cols(m, t, bj);

            bool reduced = true;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                std::int64_t q = m.at(i, t) / m.at(t, t);
                row_axpy(m, i, t, q);
                if (m.at(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                std::int64_t q = m.at(t, j) / m.at(t, t);
                col_axpy(m, j, t, q);
                if (m.at(t, j) != 0) reduced = false;
            }
            if (!reduced) continue;

            // enforce divisibility of the remaining block by the pivot
            std::int64_t piv = m.at(t, t);
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols && divides; ++j)
                    if (m.at(i, j) % piv != 0) {
                        row_axpy(m, t, i, -1);  // row_t += row_i
                        divides = false;
                    }
            if (divides) break;
        }
    done_pivot:;
    }
    std::vector<std::int64_t> d(n);
    for (std::size_t t = 0; t < n; ++t) d[t] = std::llabs(m.at(t, t));
    return d;
}

bool solve_upper_triangular(const IntMat& h, std::vector<std::int64_t> v,
                            std::vector<std::int64_t>& x) {
    const std::size_t n = h.cols;
    if (v.size() != n || h.rows != n) throw std::invalid_argument("shape mismatch");
    x.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::int64_t piv = h.at(j, j);
        if (v[j] % piv != 0) return false;
        std::int64_t q = v[j] / piv;
        x[j] = q;
        for (std::size_t k = j; k < n; ++k) v[k] -= checked_mul(q, h.at(j, k));
    }
    return true;
}

}  // namespace abelext
