#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridkit/errors.hpp"
#include "tridkit/minors.hpp"
#include "tridkit/scalar.hpp"
#include "tridkit/tridiagonal.hpp"

namespace tridkit {

/// Dense inverse with the determinant it was divided by. Row-major,
/// 1-based at(i, j). Construction rejects an exactly-zero determinant.
template <class T>
class InverseMatrix {
public:
    InverseMatrix(int n, std::vector<T> entries, T det)
        : n_(n), entries_(std::move(entries)), det_(std::move(det)) {
        if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw DimensionMismatchError("inverse grid size does not match order");
        if (scalar_traits<T>::is_zero(det_))
            throw SingularMatrixError("inverse cannot carry a zero determinant");
    }

    int order() const { return n_; }
    const T& delta() const { return det_; }

    const T& at(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("InverseMatrix::at: index out of range");
        return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    const std::vector<T>& entries() const { return entries_; }

private:
    int n_;
    std::vector<T> entries_;
    T det_;
};

namespace detail {

/// Range products over one off-diagonal band with zero-aware O(1) queries:
/// a prefix count of zeros answers "is any factor zero", and cumulative
/// products within each maximal zero-free segment answer the rest.
template <class T>
class RangeProductTable {
public:
    RangeProductTable() = default;

    explicit RangeProductTable(const std::vector<T>& entries) {
        const std::size_t m = entries.size();
        zeros_before_.assign(m + 1, 0);
        cumulative_.assign(m + 1, scalar_traits<T>::one());
        segment_start_.assign(m + 1, 1);
        int seg_start = 1;
        for (std::size_t k = 1; k <= m; ++k) {
            const T& v = entries[k - 1];
            zeros_before_[k] = zeros_before_[k - 1];
            if (scalar_traits<T>::is_zero(v)) {
                ++zeros_before_[k];
                seg_start = static_cast<int>(k) + 1;
                segment_start_[k] = seg_start;
            } else {
                segment_start_[k] = seg_start;
                cumulative_[k] = static_cast<int>(k) == seg_start
                                     ? v
                                     : cumulative_[k - 1] * v;
            }
        }
    }

    /// Product of entries i..j (1-based, inclusive); empty range gives 1.
    T product(int i, int j) const {
        if (i > j) return scalar_traits<T>::one();
        if (zeros_before_[static_cast<std::size_t>(j)] -
                zeros_before_[static_cast<std::size_t>(i - 1)] >
            0)
            return scalar_traits<T>::zero();
        const T& whole = cumulative_[static_cast<std::size_t>(j)];
        if (i == segment_start_[static_cast<std::size_t>(j)]) return whole;
        return whole / cumulative_[static_cast<std::size_t>(i - 1)];
    }

private:
    std::vector<int> zeros_before_;
    std::vector<T> cumulative_;
    std::vector<int> segment_start_;
};

} // namespace detail

/// The negated off-diagonal bands p_i = -super_i and q_i = -sub_i, with
/// segment tables for O(1) range-product queries (used by the single-entry
/// inverse formula; the full-inverse fill uses running products instead).
template <class T>
class SignedOffdiagonals {
public:
    explicit SignedOffdiagonals(const TridiagonalMatrix<T>& A) : n_(A.order()) {
        p_.reserve(static_cast<std::size_t>(n_ - 1));
        q_.reserve(static_cast<std::size_t>(n_ - 1));
        for (int i = 1; i <= n_ - 1; ++i) {
            p_.push_back(-A.super(i));
            q_.push_back(-A.sub(i));
        }
        p_products_ = detail::RangeProductTable<T>(p_);
        q_products_ = detail::RangeProductTable<T>(q_);
    }

    int order() const { return n_; }

    const T& p(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
    const T& q(int i) const { return q_[static_cast<std::size_t>(i - 1)]; }

    /// Product p_i ... p_j; 1 when i > j, 0 when any factor is zero.
    T p_product(int i, int j) const { return p_products_.product(i, j); }
    /// Product q_i ... q_j.
    T q_product(int i, int j) const { return q_products_.product(i, j); }

private:
    int n_;
    std::vector<T> p_;
    std::vector<T> q_;
    detail::RangeProductTable<T> p_products_;
    detail::RangeProductTable<T> q_products_;
};

namespace detail {

template <class T>
bool determinant_vanishes(const MinorTables<T>& t, double singular_tol) {
    using traits = scalar_traits<T>;
    const T& det = t.determinant();
    if constexpr (traits::is_exact) {
        return traits::is_zero(det);
    } else {
        if (traits::is_zero(det)) return true;
        if (singular_tol <= 0.0) return false;
        T scale = traits::abs(t.leading_minor(0));
        for (int i = 1; i <= t.n; ++i) {
            T m = traits::abs(t.leading_minor(i));
            if (scale < m) scale = m;
        }
        return !(traits::abs(det) > traits::from_double(singular_tol) * scale);
    }
}

template <class T>
double default_singular_tol(int n) {
    return static_cast<double>(n) * 0x1p-52;
}

} // namespace detail

/// Full inverse by the minor-quotient formula: with f the leading and g the
/// trailing minors and delta = f_n,
///     alpha_ii = f_{i-1} g_{i+1} / delta,
///     alpha_ij = (f_{i-1} g_{j+1} / delta) p_i ... p_{j-1}   for i < j,
///     alpha_ij = (f_{j-1} g_{i+1} / delta) q_j ... q_{i-1}   for i > j.
/// Triangles are filled with running products, so beyond the n divisions by
/// delta no division happens at all and the result exists for every
/// nonsingular input, vanishing pivots included.
///
/// tol is the breakdown tolerance handed to the minor scans. Inexact modes
/// declare Singular when |f_n| <= singular_tol * max_i |f_i|
/// (default n * 2^-52); exact mode tests f_n == 0.
template <class T>
InverseMatrix<T> invert(const TridiagonalMatrix<T>& A, double tol = 0.0,
                        std::optional<double> singular_tol = std::nullopt) {
    using traits = scalar_traits<T>;
    const int n = A.order();

    MinorTables<T> fwd = leading_minors(A, tol);
    if (detail::determinant_vanishes(
            fwd, singular_tol.value_or(detail::default_singular_tol<T>(n))))
        throw SingularMatrixError("matrix is singular");

    MinorTables<T> back = trailing_minors(A, tol);
    const T& delta = fwd.determinant();

    // row factors f_{i-1} / delta: the only divisions in the fill
    std::vector<T> row_factor(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        row_factor[static_cast<std::size_t>(i)] =
            fwd.leading_minor(i - 1) / delta;

    std::vector<T> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto cell = [&](int i, int j) -> T& {
        return alpha[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    };

    for (int i = 1; i <= n; ++i)
        cell(i, i) = row_factor[static_cast<std::size_t>(i)] * back.trailing_minor(i + 1);

    // upper triangle, row-wise running product of p = -super
    for (int i = 1; i <= n - 1; ++i) {
        T run = traits::one();
        for (int j = i + 1; j <= n; ++j) {
            run = run * (-A.super(j - 1));
            cell(i, j) = row_factor[static_cast<std::size_t>(i)] *
                         back.trailing_minor(j + 1) * run;
        }
    }

    // lower triangle, column-wise running product of q = -sub
    for (int j = 1; j <= n - 1; ++j) {
        T run = traits::one();
        for (int i = j + 1; i <= n; ++i) {
            run = run * (-A.sub(i - 1));
            cell(i, j) = row_factor[static_cast<std::size_t>(j)] *
                         back.trailing_minor(i + 1) * run;
        }
    }

    return InverseMatrix<T>(n, std::move(alpha), delta);
}

/// Single entry of the inverse in O(1) via the segment range-product
/// tables. tables must hold both minor halves; delta must be nonzero.
template <class T>
T inverse_entry(const MinorTables<T>& tables, const SignedOffdiagonals<T>& offdiag,
                const T& delta, int i, int j) {
    const int n = tables.n;
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("inverse_entry: index out of range");
    if (i == j)
        return tables.leading_minor(i - 1) * tables.trailing_minor(i + 1) / delta;
    if (i < j)
        return tables.leading_minor(i - 1) * tables.trailing_minor(j + 1) / delta *
               offdiag.p_product(i, j - 1);
    return tables.leading_minor(j - 1) * tables.trailing_minor(i + 1) / delta *
           offdiag.q_product(j, i - 1);
}

/// Inverse via the pivot recurrences (the non-breakdown-free predecessor):
///     alpha_jj = 1 / (c_j - d_j + e_j),
///     alpha_ij = -(super_i / c_i)    * alpha_{i+1,j}  for i < j,
///     alpha_ij = -(sub_{i-1} / e_i)  * alpha_{i-1,j}  for i > j.
/// Valid only when every forward and backward pivot is nonzero; throws
/// BreakdownError otherwise. Kept purely as a differential cross-check for
/// invert(); a BreakdownError on a nonsingular input is a normal outcome.
template <class T>
InverseMatrix<T> invert_pivot_recurrence(const TridiagonalMatrix<T>& A, double tol = 0.0) {
    using traits = scalar_traits<T>;
    const int n = A.order();

    MinorTables<T> fwd = leading_minors(A, tol);
    if (fwd.leading_switch != n ||
        !detail::all_pivots_pass(fwd.forward_pivots, fwd.forward_scales, n, tol))
        throw BreakdownError("a forward pivot vanished");

    MinorTables<T> back = trailing_minors(A, tol);
    if (back.trailing_switch != 1 ||
        !detail::all_pivots_pass(back.backward_pivots, back.backward_scales, n, tol))
        throw BreakdownError("a backward pivot vanished");

    std::vector<T> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto cell = [&](int i, int j) -> T& {
        return alpha[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    };

    for (int j = 1; j <= n; ++j) {
        cell(j, j) = traits::one() / (fwd.forward_pivot(j) - A.diag(j) +
                                      back.backward_pivot(j));
        for (int i = j - 1; i >= 1; --i)
            cell(i, j) = -(A.super(i) / fwd.forward_pivot(i)) * cell(i + 1, j);
        for (int i = j + 1; i <= n; ++i)
            cell(i, j) = -(A.sub(i - 1) / back.backward_pivot(i)) * cell(i - 1, j);
    }

    return InverseMatrix<T>(n, std::move(alpha), fwd.determinant());
}

/// Single entry by the Kronecker-delta triple-sum form, evaluated literally
/// (the delta factors are multiplied in as 0/1 scalars, one term per k).
/// O(n) per entry by design: it exists as an independent cross-check for
/// inverse_entry and shares none of its simplifications.
template <class T>
T inverse_entry_deltasum(const MinorTables<T>& tables,
                      const SignedOffdiagonals<T>& offdiag, const T& delta,
                      int i, int j) {
    using traits = scalar_traits<T>;
    const int n = tables.n;
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("inverse_entry_deltasum: index out of range");

    auto kronecker = [&](int a, int b) {
        return a == b ? traits::one() : traits::zero();
    };

    T before = traits::zero();
    {
        T run = traits::one();
        for (int k = j - 1; k >= 1; --k) {
            run = run * offdiag.p(k); // now p_k ... p_{j-1}
            before = before + kronecker(i, k) * tables.leading_minor(k - 1) * run;
        }
    }

    T at = kronecker(i, j) * tables.leading_minor(j - 1) * tables.trailing_minor(j + 1);

    T after = traits::zero();
    {
        T run = traits::one();
        for (int k = j + 1; k <= n; ++k) {
            run = run * offdiag.q(k - 1); // now q_j ... q_{k-1}
            after = after + kronecker(i, k) * tables.trailing_minor(k + 1) * run;
        }
    }

    return (tables.trailing_minor(j + 1) * before + at +
            tables.leading_minor(j - 1) * after) /
           delta;
}

/// The two Hadamard factors of the inverse: R is the symmetric grid of
/// minor quotients r_ij = f_{min(i,j)-1} g_{max(i,j)+1} / delta, S carries
/// the off-diagonal sign products (1 on the diagonal). Their elementwise
/// product is the inverse.
template <class T>
class HadamardFactors {
public:
    HadamardFactors(int n, std::vector<T> r, std::vector<T> s, T det)
        : n_(n), r_(std::move(r)), s_(std::move(s)), det_(std::move(det)) {
        const std::size_t cells =
            static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
        if (r_.size() != cells || s_.size() != cells)
            throw DimensionMismatchError("factor grid size does not match order");
    }

    int order() const { return n_; }
    const T& delta() const { return det_; }

    const T& r(int i, int j) const {
        return r_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }
    const T& s(int i, int j) const {
        return s_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }

    const std::vector<T>& r_entries() const { return r_; }
    const std::vector<T>& s_entries() const { return s_; }

private:
    int n_;
    std::vector<T> r_;
    std::vector<T> s_;
    T det_;
};

template <class T>
HadamardFactors<T> hadamard_factors(const TridiagonalMatrix<T>& A, double tol = 0.0,
                                    std::optional<double> singular_tol = std::nullopt) {
    using traits = scalar_traits<T>;
    const int n = A.order();

    MinorTables<T> fwd = leading_minors(A, tol);
    if (detail::determinant_vanishes(
            fwd, singular_tol.value_or(detail::default_singular_tol<T>(n))))
        throw SingularMatrixError("matrix is singular");
    MinorTables<T> back = trailing_minors(A, tol);
    const T& delta = fwd.determinant();

    std::vector<T> row_factor(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        row_factor[static_cast<std::size_t>(i)] = fwd.leading_minor(i - 1) / delta;

    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<T> r(cells), s(cells);
    auto rc = [&](int i, int j) -> T& {
        return r[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    };
    auto sc = [&](int i, int j) -> T& {
        return s[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    };

    for (int i = 1; i <= n; ++i) {
        rc(i, i) = row_factor[static_cast<std::size_t>(i)] * back.trailing_minor(i + 1);
        sc(i, i) = traits::one();
        for (int j = i + 1; j <= n; ++j) {
            T v = row_factor[static_cast<std::size_t>(i)] * back.trailing_minor(j + 1);
            rc(i, j) = v;
            rc(j, i) = v;
        }
    }
    for (int i = 1; i <= n - 1; ++i) {
        T run = traits::one();
        for (int j = i + 1; j <= n; ++j) {
            run = run * (-A.super(j - 1));
            sc(i, j) = run;
        }
    }
    for (int j = 1; j <= n - 1; ++j) {
        T run = traits::one();
        for (int i = j + 1; i <= n; ++i) {
            run = run * (-A.sub(i - 1));
            sc(i, j) = run;
        }
    }

    return HadamardFactors<T>(n, std::move(r), std::move(s), delta);
}

/// Elementwise product of the factors; reproduces invert() exactly in the
/// exact mode.
template <class T>
InverseMatrix<T> hadamard_recombine(const HadamardFactors<T>& factors) {
    const int n = factors.order();
    std::vector<T> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < alpha.size(); ++k)
        alpha[k] = factors.r_entries()[k] * factors.s_entries()[k];
    return InverseMatrix<T>(n, std::move(alpha), factors.delta());
}

/// Square boolean grid, 1-based.
class BoolGrid {
public:
    explicit BoolGrid(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

    int order() const { return n_; }
    bool at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] != 0;
    }
    void set(int i, int j) {
        cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = 1;
    }
    std::size_t count() const {
        std::size_t total = 0;
        for (auto c : cells_) total += c;
        return total;
    }

private:
    int n_;
    std::vector<std::uint8_t> cells_;
};

/// Entries of the inverse forced to be exactly zero by the band and minor
/// structure:
///   super_k = 0  ->  rows 1..k x cols k+1..n,
///   sub_k   = 0  ->  rows k+1..n x cols 1..k,
///   f_k = 0 (k < n)      ->  row and column k+1 at indices >= k+1,
///   g_k = 0 (k >= 2)     ->  row and column k-1 at indices <= k-1.
/// The zero tests are exact in every mode, so invert() lands exact zeros on
/// every masked cell. tables must hold both halves.
template <class T>
BoolGrid zero_structure(const TridiagonalMatrix<T>& A, const MinorTables<T>& tables) {
    using traits = scalar_traits<T>;
    const int n = A.order();
    if (!tables.has_leading() || !tables.has_trailing())
        throw std::invalid_argument("zero_structure: tables must be complete");

    BoolGrid mask(n);
    for (int k = 1; k <= n - 1; ++k) {
        if (traits::is_zero(A.super(k))) {
            for (int i = 1; i <= k; ++i)
                for (int j = k + 1; j <= n; ++j) mask.set(i, j);
        }
        if (traits::is_zero(A.sub(k))) {
            for (int j = 1; j <= k; ++j)
                for (int i = k + 1; i <= n; ++i) mask.set(i, j);
        }
    }
    for (int k = 1; k <= n - 1; ++k) {
        if (traits::is_zero(tables.leading_minor(k))) {
            for (int j = k + 1; j <= n; ++j) {
                mask.set(k + 1, j);
                mask.set(j, k + 1);
            }
        }
    }
    for (int k = 2; k <= n; ++k) {
        if (traits::is_zero(tables.trailing_minor(k))) {
            for (int i = 1; i <= k - 1; ++i) {
                mask.set(i, k - 1);
                mask.set(k - 1, i);
            }
        }
    }
    return mask;
}

} // namespace tridkit
