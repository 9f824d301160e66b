#pragma once

#include <algorithm>
#include <vector>

#include "tridkit/errors.hpp"
#include "tridkit/scalar.hpp"
#include "tridkit/tridiagonal.hpp"

namespace tridkit {

/// Principal-minor tables of a tridiagonal matrix.
///
/// leading_minor(i) is the determinant of the top-left i x i block
/// (i = 0..n, with leading_minor(0) = 1); trailing_minor(i) is the
/// determinant of the block spanning rows/columns i..n (i = 1..n+1, with
/// trailing_minor(n+1) = 1). The forward pivots are the continued-fraction
/// ratios leading_minor(i)/leading_minor(i-1) computed until the first
/// vanishing pivot; backward pivots mirror them from the bottom. The switch
/// indices record where each hybrid scan abandoned the pivot recurrence for
/// the division-free three-term one (= n, resp. 1, when it never did).
///
/// leading_minors() fills only the leading half, trailing_minors() only the
/// trailing half; minor_tables() fills both.
template <class T>
struct MinorTables {
    int n = 0;

    std::vector<T> leading;            // index i = 0..n
    std::vector<T> trailing;           // index i = 1..n+1 ([0] unused)
    std::vector<T> forward_pivots;     // pivots 1..leading_switch
    std::vector<T> backward_pivots;    // pivots trailing_switch..n
    int leading_switch = 0;
    int trailing_switch = 0;

    // breakdown bookkeeping: |summand| scales used by the relative pivot
    // test, parallel to the pivot vectors (exact modes never read them)
    std::vector<T> forward_scales;
    std::vector<T> backward_scales;

    bool has_leading() const { return !leading.empty(); }
    bool has_trailing() const { return !trailing.empty(); }

    const T& leading_minor(int i) const { return leading[static_cast<std::size_t>(i)]; }
    const T& trailing_minor(int i) const { return trailing[static_cast<std::size_t>(i)]; }

    /// Pivot i, valid for i in 1..leading_switch.
    const T& forward_pivot(int i) const {
        return forward_pivots[static_cast<std::size_t>(i - 1)];
    }
    /// Pivot i, valid for i in trailing_switch..n.
    const T& backward_pivot(int i) const {
        return backward_pivots[static_cast<std::size_t>(i - trailing_switch)];
    }

    const T& determinant() const { return leading[static_cast<std::size_t>(n)]; }
};

/// Hybrid evaluation of the leading principal minors.
///
/// Runs the pivot recurrence
///     pivot_1 = d_1,  pivot_m = d_m - super_{m-1} sub_{m-1} / pivot_{m-1}
/// with leading_minor(m) = pivot_m * leading_minor(m-1) while the pivots
/// stay nonzero under the breakdown test, then switches permanently to the
/// three-term recurrence
///     f_k = d_k f_{k-1} - super_{k-1} sub_{k-1} f_{k-2}
/// for the rest. Total on every input: nothing is ever divided by a value
/// that failed the test.
///
/// tol is the relative breakdown tolerance for inexact scalars (0 keeps the
/// exact-zero test); exact scalars ignore it.
template <class T>
MinorTables<T> leading_minors(const TridiagonalMatrix<T>& A, double tol = 0.0) {
    using traits = scalar_traits<T>;
    const int n = A.order();

    MinorTables<T> t;
    t.n = n;
    t.leading.resize(static_cast<std::size_t>(n) + 1);
    t.leading[0] = traits::one();
    t.leading[1] = A.diag(1);
    t.forward_pivots.reserve(static_cast<std::size_t>(n));
    t.forward_pivots.push_back(A.diag(1));
    t.forward_scales.push_back(traits::abs(A.diag(1)));

    int m = 1;
    while (m <= n - 1 &&
           !pivot_vanishes(t.forward_pivots.back(), t.forward_scales.back(), tol)) {
        ++m;
        const T ratio = A.super(m - 1) * A.sub(m - 1) / t.forward_pivots.back();
        const T pivot = A.diag(m) - ratio;
        t.forward_pivots.push_back(pivot);
        t.forward_scales.push_back(traits::abs(A.diag(m)) + traits::abs(ratio));
        t.leading[static_cast<std::size_t>(m)] =
            pivot * t.leading[static_cast<std::size_t>(m - 1)];
    }
    t.leading_switch = m;

    for (int k = m + 1; k <= n; ++k) {
        t.leading[static_cast<std::size_t>(k)] =
            A.diag(k) * t.leading[static_cast<std::size_t>(k - 1)] -
            A.super(k - 1) * A.sub(k - 1) * t.leading[static_cast<std::size_t>(k - 2)];
    }
    return t;
}

/// Mirrored hybrid evaluation of the trailing principal minors:
/// pivot_n = d_n, pivot_m = d_m - super_m sub_m / pivot_{m+1} while nonzero,
/// then g_k = d_k g_{k+1} - super_k sub_k g_{k+2} down to k = 1.
template <class T>
MinorTables<T> trailing_minors(const TridiagonalMatrix<T>& A, double tol = 0.0) {
    using traits = scalar_traits<T>;
    const int n = A.order();

    MinorTables<T> t;
    t.n = n;
    t.trailing.resize(static_cast<std::size_t>(n) + 2);
    t.trailing[static_cast<std::size_t>(n) + 1] = traits::one();
    t.trailing[static_cast<std::size_t>(n)] = A.diag(n);

    std::vector<T> pivots_rev;
    std::vector<T> scales_rev;
    pivots_rev.reserve(static_cast<std::size_t>(n));
    pivots_rev.push_back(A.diag(n));
    scales_rev.push_back(traits::abs(A.diag(n)));

    int m = n;
    while (m >= 2 && !pivot_vanishes(pivots_rev.back(), scales_rev.back(), tol)) {
        --m;
        const T ratio = A.super(m) * A.sub(m) / pivots_rev.back();
        const T pivot = A.diag(m) - ratio;
        pivots_rev.push_back(pivot);
        scales_rev.push_back(traits::abs(A.diag(m)) + traits::abs(ratio));
        t.trailing[static_cast<std::size_t>(m)] =
            pivot * t.trailing[static_cast<std::size_t>(m + 1)];
    }
    t.trailing_switch = m;

    std::reverse(pivots_rev.begin(), pivots_rev.end());
    std::reverse(scales_rev.begin(), scales_rev.end());
    t.backward_pivots = std::move(pivots_rev);
    t.backward_scales = std::move(scales_rev);

    for (int k = m - 1; k >= 1; --k) {
        t.trailing[static_cast<std::size_t>(k)] =
            A.diag(k) * t.trailing[static_cast<std::size_t>(k + 1)] -
            A.super(k) * A.sub(k) * t.trailing[static_cast<std::size_t>(k + 2)];
    }
    return t;
}

/// Both halves merged into one complete table.
template <class T>
MinorTables<T> minor_tables(const TridiagonalMatrix<T>& A, double tol = 0.0) {
    MinorTables<T> t = leading_minors(A, tol);
    MinorTables<T> back = trailing_minors(A, tol);
    t.trailing = std::move(back.trailing);
    t.backward_pivots = std::move(back.backward_pivots);
    t.backward_scales = std::move(back.backward_scales);
    t.trailing_switch = back.trailing_switch;
    return t;
}

/// det(A) as the last leading minor. Total on every input.
template <class T>
T determinant(const TridiagonalMatrix<T>& A, double tol = 0.0) {
    return leading_minors(A, tol).determinant();
}

/// Outcome of the sufficiency check for nonsingularity. Either certificate
/// guarantees det != 0; Inconclusive decides nothing (the §2-style matrices
/// with a vanishing pivot on both scans can still be nonsingular).
enum class NonsingularCertificate {
    AllForwardPivotsNonzero,
    AllBackwardPivotsNonzero,
    Inconclusive,
};

namespace detail {

template <class T>
bool all_pivots_pass(const std::vector<T>& pivots, const std::vector<T>& scales,
                     int expected_count, double tol) {
    if (static_cast<int>(pivots.size()) != expected_count) return false;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivot_vanishes(pivots[i], scales[i], tol)) return false;
    return true;
}

} // namespace detail

/// Checks the two sufficient (not necessary) nonsingularity conditions:
/// every forward pivot nonzero, or every backward pivot nonzero.
template <class T>
NonsingularCertificate is_nonsingular_sufficient(const TridiagonalMatrix<T>& A,
                                                 double tol = 0.0) {
    const int n = A.order();
    MinorTables<T> fwd = leading_minors(A, tol);
    if (fwd.leading_switch == n &&
        detail::all_pivots_pass(fwd.forward_pivots, fwd.forward_scales, n, tol))
        return NonsingularCertificate::AllForwardPivotsNonzero;

    MinorTables<T> back = trailing_minors(A, tol);
    if (back.trailing_switch == 1 &&
        detail::all_pivots_pass(back.backward_pivots, back.backward_scales, n, tol))
        return NonsingularCertificate::AllBackwardPivotsNonzero;

    return NonsingularCertificate::Inconclusive;
}

/// Positive definiteness of a symmetric tridiagonal matrix: true iff every
/// forward pivot is strictly positive. Throws NotSymmetricError when the
/// off-diagonal bands differ.
template <class T>
bool is_positive_definite_symmetric(const TridiagonalMatrix<T>& A, double tol = 0.0) {
    using traits = scalar_traits<T>;
    if (!A.is_symmetric())
        throw NotSymmetricError("positive-definiteness test needs equal bands");

    MinorTables<T> fwd = leading_minors(A, tol);
    if (fwd.leading_switch != A.order()) return false; // a pivot vanished
    for (std::size_t i = 0; i < fwd.forward_pivots.size(); ++i) {
        if (pivot_vanishes(fwd.forward_pivots[i], fwd.forward_scales[i], tol))
            return false;
        if (traits::sign(fwd.forward_pivots[i]) <= 0) return false;
    }
    return true;
}

} // namespace tridkit
