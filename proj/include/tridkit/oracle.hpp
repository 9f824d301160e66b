#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tridkit/errors.hpp"
#include "tridkit/scalar.hpp"
#include "tridkit/tridiagonal.hpp"

namespace tridkit {

/// Dense square matrix used by the brute-force reference routines.
/// Row-major, 1-based at(i, j).
template <class T>
class DenseMatrix {
public:
    explicit DenseMatrix(int n)
        : n_(n),
          entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                   scalar_traits<T>::zero()) {
        if (n < 1) throw DimensionMismatchError("dense matrix needs order >= 1");
    }

    static DenseMatrix identity(int n) {
        DenseMatrix out(n);
        for (int i = 1; i <= n; ++i) out.at(i, i) = scalar_traits<T>::one();
        return out;
    }

    int order() const { return n_; }

    T& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }
    const T& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    const std::vector<T>& entries() const { return entries_; }

private:
    int n_;
    std::vector<T> entries_;
};

/// Expand the bands into a dense matrix; everything farther than one off
/// the diagonal is exactly zero.
template <class T>
DenseMatrix<T> to_dense(const TridiagonalMatrix<T>& A) {
    const int n = A.order();
    DenseMatrix<T> M(n);
    for (int i = 1; i <= n; ++i) M.at(i, i) = A.diag(i);
    for (int i = 1; i <= n - 1; ++i) {
        M.at(i, i + 1) = A.super(i);
        M.at(i + 1, i) = A.sub(i);
    }
    return M;
}

namespace detail {

// fraction-free Bareiss elimination; exact for integer and rational scalars
template <class T>
T bareiss_determinant(DenseMatrix<T> M) {
    using traits = scalar_traits<T>;
    const int n = M.order();
    T prev = traits::one();
    int sign = 1;

    for (int k = 1; k <= n - 1; ++k) {
        if (traits::is_zero(M.at(k, k))) {
            int swap_row = 0;
            for (int i = k + 1; i <= n; ++i) {
                if (!traits::is_zero(M.at(i, k))) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == 0) return traits::zero();
            for (int j = 1; j <= n; ++j) std::swap(M.at(k, j), M.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
            M.at(i, k) = traits::zero();
        }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n, n) : -M.at(n, n);
}

// plain elimination with partial pivoting for inexact scalars
template <class T>
T pivoting_determinant(DenseMatrix<T> M) {
    using traits = scalar_traits<T>;
    const int n = M.order();
    T det = traits::one();

    for (int k = 1; k <= n; ++k) {
        int pivot_row = k;
        T best = traits::abs(M.at(k, k));
        for (int i = k + 1; i <= n; ++i) {
            T mag = traits::abs(M.at(i, k));
            if (best < mag) {
                best = mag;
                pivot_row = i;
            }
        }
        if (traits::is_zero(M.at(pivot_row, k))) return traits::zero();
        if (pivot_row != k) {
            for (int j = 1; j <= n; ++j) std::swap(M.at(k, j), M.at(pivot_row, j));
            det = -det;
        }
        det = det * M.at(k, k);
        for (int i = k + 1; i <= n; ++i) {
            T factor = M.at(i, k) / M.at(k, k);
            for (int j = k; j <= n; ++j)
                M.at(i, j) = M.at(i, j) - factor * M.at(k, j);
        }
    }
    return det;
}

} // namespace detail

/// Reference determinant: fraction-free Bareiss elimination for exact
/// scalars, partial-pivot elimination otherwise.
template <class T>
T dense_determinant(DenseMatrix<T> M) {
    if constexpr (scalar_traits<T>::is_exact)
        return detail::bareiss_determinant(std::move(M));
    else
        return detail::pivoting_determinant(std::move(M));
}

/// Reference inverse by Gauss-Jordan on [M | I]. Exact scalars pivot on the
/// first nonzero candidate, inexact ones on the largest magnitude. Throws
/// SingularMatrixError when no pivot exists.
template <class T>
DenseMatrix<T> dense_inverse(DenseMatrix<T> M) {
    using traits = scalar_traits<T>;
    const int n = M.order();
    DenseMatrix<T> inv = DenseMatrix<T>::identity(n);

    for (int k = 1; k <= n; ++k) {
        int pivot_row = 0;
        if constexpr (traits::is_exact) {
            for (int i = k; i <= n; ++i) {
                if (!traits::is_zero(M.at(i, k))) {
                    pivot_row = i;
                    break;
                }
            }
        } else {
            T best = traits::zero();
            for (int i = k; i <= n; ++i) {
                T mag = traits::abs(M.at(i, k));
                if (pivot_row == 0 || best < mag) {
                    best = mag;
                    pivot_row = i;
                }
            }
            if (pivot_row != 0 && traits::is_zero(M.at(pivot_row, k))) pivot_row = 0;
        }
        if (pivot_row == 0) throw SingularMatrixError("dense matrix is singular");

        if (pivot_row != k) {
            for (int j = 1; j <= n; ++j) {
                std::swap(M.at(k, j), M.at(pivot_row, j));
                std::swap(inv.at(k, j), inv.at(pivot_row, j));
            }
        }
        T pivot = M.at(k, k);
        for (int j = 1; j <= n; ++j) {
            M.at(k, j) = M.at(k, j) / pivot;
            inv.at(k, j) = inv.at(k, j) / pivot;
        }
        for (int i = 1; i <= n; ++i) {
            if (i == k) continue;
            T factor = M.at(i, k);
            if (traits::is_zero(factor)) continue;
            for (int j = 1; j <= n; ++j) {
                M.at(i, j) = M.at(i, j) - factor * M.at(k, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

/// Determinant of the contiguous principal block rows/cols lo..hi.
template <class T>
T submatrix_minor(const DenseMatrix<T>& M, int lo, int hi) {
    const int n = M.order();
    if (lo < 1 || hi > n || lo > hi)
        throw std::out_of_range("submatrix_minor: bad block range");
    DenseMatrix<T> block(hi - lo + 1);
    for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j)
            block.at(i - lo + 1, j - lo + 1) = M.at(i, j);
    return dense_determinant(std::move(block));
}

} // namespace tridkit
