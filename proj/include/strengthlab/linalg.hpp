#ifndef STRENGTHLAB_LINALG_HPP
#define STRENGTHLAB_LINALG_HPP

#include "strengthlab/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace strengthlab {

// Dense matrix over Q(i). Small and exact; no attempt at sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

namespace detail {

// Scales each row by the lcm of the denominators appearing in it (both the
// real and imaginary parts), so that every entry becomes a Gaussian integer.
// Row scaling by a nonzero rational preserves rank.
inline void clear_denominators_rowwise(Matrix& m) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const FieldElement& z = m.at(r, c);
            for (const Integer& d : {Integer(denominator(z.real_part())),
                                     Integer(denominator(z.imag_part()))}) {
                l = l / gcd(l, d) * d;
            }
        }
        if (l == 1) continue;
        FieldElement scale{Rational(l)};
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= scale;
    }
}

} // namespace detail

/*
 * Exact rank by fraction-free (Bareiss) elimination.
 *
 * Rows are first scaled to Gaussian-integer entries; the Bareiss update
 *   M[i][j] <- (M[i][j] * pivot - M[i][pc] * M[p][j]) / prev_pivot
 * then divides exactly at every step, so intermediate entries stay
 * single minors of the integer matrix instead of growing doubly
 * exponentially. Pivoting is by first nonzero entry; there is no
 * numerical stability concern in exact arithmetic.
 */
inline std::size_t rank(Matrix m) {
    detail::clear_denominators_rowwise(m);
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t rk = 0;
    FieldElement prev{1};
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        std::size_t piv = nr;
        for (std::size_t r = rk; r < nr; ++r) {
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        }
        if (piv == nr) continue;
        m.swap_rows(rk, piv);
        const FieldElement pivot = m.at(rk, col);
        for (std::size_t r = rk + 1; r < nr; ++r) {
            const FieldElement lead = m.at(r, col);
            for (std::size_t j = col; j < nc; ++j) {
                m.at(r, j) = (m.at(r, j) * pivot - lead * m.at(rk, j)) / prev;
            }
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

/*
 * Reduced row echelon form over the field, in place.
 * Returns the pivot column of each pivot row.
 */
inline std::vector<std::size_t> rref(Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = nr;
        for (std::size_t r = row; r < nr; ++r) {
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        }
        if (piv == nr) continue;
        m.swap_rows(row, piv);
        const FieldElement inv = FieldElement(1) / m.at(row, col);
        for (std::size_t j = col; j < nc; ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const FieldElement f = m.at(r, col);
            for (std::size_t j = col; j < nc; ++j) {
                m.at(r, j) -= f * m.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Solves A x = b exactly. Returns one solution (free variables set to zero),
// or nullopt when the system is inconsistent.
inline std::optional<std::vector<FieldElement>> solve(const Matrix& a,
                                                      const std::vector<FieldElement>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == a.cols()) return std::nullopt; // pivot in the rhs column
    }
    std::vector<FieldElement> x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        x[pivots[k]] = aug.at(k, a.cols());
    }
    return x;
}

// Basis of the right kernel {x : A x = 0}, one vector per free column.
inline std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(a.cols());
        v[free] = FieldElement(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -m.at(k, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/*
 * Symmetric congruence diagonalization of a rational symmetric matrix:
 * produces diag entries d and an invertible Q with
 *   f(x) = x^T G x = sum_k d[k] * (Q x)_k^2.
 * Rows of Q are the diagonalizing linear forms. Rational throughout;
 * rank and signature read off the signs of d exactly.
 */
struct SymmetricDiagonalization {
    std::vector<Rational> diag;              // length n, zeros allowed
    std::vector<std::vector<Rational>> forms; // rows of Q
};

inline SymmetricDiagonalization diagonalize_symmetric(std::vector<std::vector<Rational>> g) {
    const std::size_t n = g.size();
    for (const auto& row : g) {
        if (row.size() != n) throw std::invalid_argument("diagonalize_symmetric: not square");
    }
    // Q starts as the identity; every congruence step on g applies the
    // corresponding row operation to Q so that g_orig = Q^T' D Q' holds
    // in the form f(x) = sum d_k (Qx)_k^2.
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) q[i][i] = 1;

    auto sym_add = [&](std::size_t dst, std::size_t src, const Rational& c) {
        // Congruence g <- E^T g E with E = I + c*e_src*e_dst^T
        // (row/col dst gain c times row/col src). The tracked Q picks up
        // the inverse elementary on the left: row src loses c times row dst.
        for (std::size_t j = 0; j < n; ++j) g[dst][j] += c * g[src][j];
        for (std::size_t i = 0; i < n; ++i) g[i][dst] += c * g[i][src];
        for (std::size_t j = 0; j < n; ++j) q[src][j] -= c * q[dst][j];
    };
    auto sym_swap = [&](std::size_t a, std::size_t b) {
        std::swap(g[a], g[b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(g[i][a], g[i][b]);
        std::swap(q[a], q[b]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (g[k][k].is_zero()) {
            std::size_t j = n;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (!g[r][r].is_zero()) { j = r; break; }
            }
            if (j < n) {
                sym_swap(k, j);
            } else {
                // All remaining diagonal entries vanish; a nonzero off-diagonal
                // pair g[r][s] is turned into a diagonal entry by r += s.
                bool found = false;
                for (std::size_t r = k; r < n && !found; ++r) {
                    for (std::size_t s = r + 1; s < n && !found; ++s) {
                        if (!g[r][s].is_zero()) {
                            sym_add(r, s, Rational(1));
                            if (r != k) sym_swap(k, r);
                            found = true;
                        }
                    }
                }
                if (!found) break; // remaining block is zero
            }
        }
        const Rational pivot = g[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (!g[r][k].is_zero()) sym_add(r, k, -g[r][k] / pivot);
        }
    }

    SymmetricDiagonalization out;
    out.diag.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.diag[k] = g[k][k];
    out.forms = std::move(q);
    return out;
}

} // namespace strengthlab

#endif // STRENGTHLAB_LINALG_HPP
