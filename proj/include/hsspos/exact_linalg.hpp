#ifndef HSSPOS_EXACT_LINALG_HPP
#define HSSPOS_EXACT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsspos/error.hpp"
#include "hsspos/rational.hpp"

namespace hsspos {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Clears denominators row by row; the row space (hence the rank) is unchanged.
inline Matrix<Integer> integer_rows(const RationalMatrix& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer num = m(i, j).get_num() * l;
            mpz_divexact(out(i, j).get_mpz_t(), num.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
    }
    return out;
}

/// Rank by fraction-free (Bareiss) elimination.  Every intermediate entry is a
/// minor of the input, so each division below is exact.
inline std::size_t bareiss_rank(Matrix<Integer> a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a(piv, col) == 0) ++piv;
        if (piv == m) continue;
        a.swap_rows(piv, rank);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer t = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, col) = 0;
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const RationalMatrix& m) { return bareiss_rank(integer_rows(m)); }

inline std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

/// Gauss-Jordan inverse over the rationals.
inline RationalMatrix inverse(RationalMatrix a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw ArgumentError("inverse: matrix is not square");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw ArgumentError("inverse: matrix is singular");
        a.swap_rows(piv, col);
        inv.swap_rows(piv, col);
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

struct PsdCertificate {
    bool positive_semidefinite = false;
    std::size_t rank = 0;          // number of positive pivots taken
    std::vector<std::size_t> pivots;
    std::string failure;           // empty when certified
};

/// Exact semidefiniteness test by symmetric diagonal pivoting.
///
/// A positive diagonal entry is eliminated (the Schur complement of a PSD
/// matrix in a positive pivot is PSD).  Once no positive diagonal entry is
/// left, the remainder is PSD iff it is identically zero: a negative diagonal
/// entry, or a nonzero off-diagonal entry next to two zero diagonal entries,
/// exhibits a negative direction.  On success `rank` is the exact rank.
inline PsdCertificate certify_psd(RationalMatrix a) {
    const std::size_t n = a.rows();
    if (!a.is_symmetric()) return {false, 0, {}, "matrix is not symmetric"};
    PsdCertificate cert;
    std::vector<bool> active(n, true);
    for (;;) {
        std::optional<std::size_t> k;
        for (std::size_t i = 0; i < n && !k; ++i)
            if (active[i] && sgn(a(i, i)) > 0) k = i;
        if (!k) break;
        const std::size_t p = *k;
        active[p] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || a(i, p) == 0) continue;
            const Rational f = a(i, p) / a(p, p);
            for (std::size_t j = 0; j < n; ++j)
                if (active[j]) a(i, j) -= f * a(p, j);
        }
        cert.pivots.push_back(p);
        ++cert.rank;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        if (sgn(a(i, i)) < 0) {
            cert.failure = "negative reduced diagonal at index " + std::to_string(i);
            return cert;
        }
        for (std::size_t j = i + 1; j < n; ++j)
            if (active[j] && a(i, j) != 0) {
                cert.failure = "indefinite 2x2 block at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
                return cert;
            }
    }
    cert.positive_semidefinite = true;
    return cert;
}

} // namespace hsspos

#endif
