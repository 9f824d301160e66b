#pragma once

// Shared fixtures and generators for the test suites: the small matrices
// with known tables, random-instance builders (including planted zero
// leading minors and zero off-diagonals), and independent reference
// recurrences the hybrid scans are compared against.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tridkit/inverse.hpp"
#include "tridkit/minors.hpp"
#include "tridkit/oracle.hpp"
#include "tridkit/rational.hpp"
#include "tridkit/scalar.hpp"
#include "tridkit/tridiagonal.hpp"

namespace support {

using tridkit::BigInt;
using tridkit::Rational;
using tridkit::scalar_traits;
using tridkit::TridiagonalMatrix;

template <class T>
TridiagonalMatrix<T> make(const std::vector<long long>& diag,
                          const std::vector<long long>& super,
                          const std::vector<long long>& sub) {
    std::vector<T> d, a, b;
    for (long long v : diag) d.push_back(scalar_traits<T>::from_int(v));
    for (long long v : super) a.push_back(scalar_traits<T>::from_int(v));
    for (long long v : sub) b.push_back(scalar_traits<T>::from_int(v));
    return TridiagonalMatrix<T>(std::move(d), std::move(a), std::move(b));
}

// --- fixed matrices with hand-checked tables ------------------------------

/// 4x4 with determinant exactly 0 (the forward scan ends on a zero pivot).
template <class T>
TridiagonalMatrix<T> singular_4x4() {
    return make<T>({2, 2, 2, -3}, {-1, 1, 3}, {-2, 1, -1});
}

/// Symmetric positive definite 4x4: leading minors [1,25,244,820,576],
/// trailing minors [576,36,4,1,1].
template <class T>
TridiagonalMatrix<T> sym_positive_4x4() {
    return make<T>({25, 13, 5, 1}, {-9, -4, -1}, {-9, -4, -1});
}

/// Symmetric 5x5 whose backward scan breaks down (trailing minor g_4 = 0):
/// leading [1,1,2,1,-1,-2], trailing [-2,-3,-1,0,1,1].
template <class T>
TridiagonalMatrix<T> breakdown_5x5() {
    return make<T>({1, 3, 1, 1, 1}, {-1, -1, -1, -1}, {-1, -1, -1, -1});
}

/// 3x3 with a vanishing forward pivot yet determinant -4.
template <class T>
TridiagonalMatrix<T> gap_forward_3x3() {
    return make<T>({1, 1, 3}, {1, 2}, {1, 2});
}

/// 3x3 with a vanishing backward pivot yet determinant 2.
template <class T>
TridiagonalMatrix<T> gap_backward_3x3() {
    return make<T>({3, 1, 1}, {2, 1}, {-1, 1});
}

/// 3x3 with vanishing pivots on both scans yet determinant -1.
template <class T>
TridiagonalMatrix<T> gap_both_3x3() {
    return make<T>({1, 1, 1}, {1, 1}, {1, 1});
}

/// The n x n matrix whose inverse is [max(i, j)]: unit off-diagonals,
/// diagonal [-1, -2, ..., -2, -(n-1)/n]. Rational entries.
inline TridiagonalMatrix<Rational> maxij_matrix(int n) {
    std::vector<Rational> d, a, b;
    d.push_back(Rational(-1));
    for (int i = 2; i <= n - 1; ++i) d.push_back(Rational(-2));
    if (n >= 2) d.push_back(Rational(BigInt(-(n - 1)), BigInt(n)));
    for (int i = 1; i <= n - 1; ++i) {
        a.push_back(Rational(1));
        b.push_back(Rational(1));
    }
    return TridiagonalMatrix<Rational>(std::move(d), std::move(a), std::move(b));
}

/// Second-difference (discrete Laplacian) matrix: d = 2, off-diagonals -1.
/// Centrosymmetric; inverse entries are i(n+1-j)/(n+1) for i <= j.
template <class T>
TridiagonalMatrix<T> laplacian_matrix(int n) {
    std::vector<long long> d(static_cast<std::size_t>(n), 2);
    std::vector<long long> off(static_cast<std::size_t>(n) - 1, -1);
    return make<T>(d, off, off);
}

template <class T>
TridiagonalMatrix<T> identity_matrix(int n) {
    std::vector<long long> d(static_cast<std::size_t>(n), 1);
    std::vector<long long> off(static_cast<std::size_t>(n) - 1, 0);
    return make<T>(d, off, off);
}

// --- independent references ------------------------------------------------

/// Pure three-term recurrence for the leading minors, no pivots involved.
template <class T>
std::vector<T> three_term_leading(const TridiagonalMatrix<T>& A) {
    const int n = A.order();
    std::vector<T> f(static_cast<std::size_t>(n) + 1);
    f[0] = scalar_traits<T>::one();
    f[1] = A.diag(1);
    for (int i = 2; i <= n; ++i)
        f[static_cast<std::size_t>(i)] =
            A.diag(i) * f[static_cast<std::size_t>(i - 1)] -
            A.super(i - 1) * A.sub(i - 1) * f[static_cast<std::size_t>(i - 2)];
    return f;
}

/// Pure three-term recurrence for the trailing minors (index i at [i]).
template <class T>
std::vector<T> three_term_trailing(const TridiagonalMatrix<T>& A) {
    const int n = A.order();
    std::vector<T> g(static_cast<std::size_t>(n) + 2);
    g[static_cast<std::size_t>(n) + 1] = scalar_traits<T>::one();
    g[static_cast<std::size_t>(n)] = A.diag(n);
    for (int i = n - 1; i >= 1; --i)
        g[static_cast<std::size_t>(i)] =
            A.diag(i) * g[static_cast<std::size_t>(i + 1)] -
            A.super(i) * A.sub(i) * g[static_cast<std::size_t>(i + 2)];
    return g;
}

/// Cofactor expansion along the first row; O(n!) but a genuinely different
/// algorithm, used to sanity-check the dense elimination oracles at tiny n.
template <class T>
T cofactor_det(const tridkit::DenseMatrix<T>& M) {
    const int n = M.order();
    if (n == 1) return M.at(1, 1);
    T total = scalar_traits<T>::zero();
    for (int j = 1; j <= n; ++j) {
        if (scalar_traits<T>::is_zero(M.at(1, j))) continue;
        tridkit::DenseMatrix<T> minor(n - 1);
        for (int i = 2; i <= n; ++i) {
            int col = 1;
            for (int k = 1; k <= n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, col) = M.at(i, k);
                ++col;
            }
        }
        T term = M.at(1, j) * cofactor_det(minor);
        total = j % 2 ? total + term : total - term;
    }
    return total;
}

// --- random instances -------------------------------------------------------

inline long long rand_entry(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random matrix with integer entries in [lo, hi].
template <class T>
TridiagonalMatrix<T> random_int_matrix(std::mt19937_64& rng, int n, long long lo = -5,
                                       long long hi = 5) {
    std::vector<long long> d, a, b;
    for (int i = 0; i < n; ++i) d.push_back(rand_entry(rng, lo, hi));
    for (int i = 0; i < n - 1; ++i) {
        a.push_back(rand_entry(rng, lo, hi));
        b.push_back(rand_entry(rng, lo, hi));
    }
    return make<T>(d, a, b);
}

/// Random matrix with at least one zero off-diagonal entry planted.
template <class T>
TridiagonalMatrix<T> random_zero_offdiag_matrix(std::mt19937_64& rng, int n) {
    std::vector<long long> d, a, b;
    for (int i = 0; i < n; ++i) d.push_back(rand_entry(rng, -5, 5));
    for (int i = 0; i < n - 1; ++i) {
        a.push_back(rand_entry(rng, -5, 5));
        b.push_back(rand_entry(rng, -5, 5));
    }
    if (n >= 2) {
        std::size_t pos = rng() % (static_cast<std::size_t>(n) - 1);
        (rng() % 2 ? a : b)[pos] = 0;
    }
    return make<T>(d, a, b);
}

/// Random integer matrix with a zero leading principal minor planted at a
/// random index k <= n-1 (requires n >= 2). Entries stay in [-5, 5].
inline TridiagonalMatrix<Rational> random_zero_minor_matrix(std::mt19937_64& rng,
                                                            int n) {
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<long long> d(static_cast<std::size_t>(n));
    std::vector<long long> a(static_cast<std::size_t>(n) - 1);
    std::vector<long long> b(static_cast<std::size_t>(n) - 1);
    for (auto& v : d) v = rand_entry(rng, -5, 5);
    for (auto& v : a) v = rand_entry(rng, -5, 5);
    for (auto& v : b) v = rand_entry(rng, -5, 5);

    if (k == 1) {
        d[0] = 0;
    } else {
        // choose (d_k, a_{k-1}, b_{k-1}) with d_k f_{k-1} == a_{k-1} b_{k-1} f_{k-2},
        // preferring nonzero off-diagonals
        long long f2 = 1, f1 = d[0]; // f_{i-2}, f_{i-1} rolling
        for (int i = 2; i <= k - 1; ++i) {
            long long next = d[static_cast<std::size_t>(i - 1)] * f1 -
                             a[static_cast<std::size_t>(i - 2)] *
                                 b[static_cast<std::size_t>(i - 2)] * f2;
            f2 = f1;
            f1 = next;
        }
        std::vector<long long> vals;
        for (long long v = -5; v <= 5; ++v) vals.push_back(v);
        std::shuffle(vals.begin(), vals.end(), rng);
        bool found = false;
        for (long long dk : vals) {
            for (long long av : vals) {
                for (long long bv : vals) {
                    if (av == 0 || bv == 0) continue;
                    if (dk * f1 == av * bv * f2) {
                        d[static_cast<std::size_t>(k - 1)] = dk;
                        a[static_cast<std::size_t>(k - 2)] = av;
                        b[static_cast<std::size_t>(k - 2)] = bv;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            // always works: f_k = 0*f_{k-1} - 0*b*f_{k-2}
            d[static_cast<std::size_t>(k - 1)] = 0;
            a[static_cast<std::size_t>(k - 2)] = 0;
        }
    }
    return make<Rational>(d, a, b);
}

/// Random centrosymmetric matrix: palindromic diagonal, mirrored bands.
template <class T>
TridiagonalMatrix<T> random_centrosymmetric_matrix(std::mt19937_64& rng, int n) {
    std::vector<long long> d(static_cast<std::size_t>(n));
    std::vector<long long> a(static_cast<std::size_t>(n) - 1);
    std::vector<long long> b(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < (n + 1) / 2; ++i)
        d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(n - 1 - i)] =
            rand_entry(rng, -5, 5);
    for (int i = 1; i <= n - 1; ++i)
        a[static_cast<std::size_t>(i - 1)] = rand_entry(rng, -5, 5);
    for (int i = 1; i <= n - 1; ++i)
        b[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(n - i - 1)];
    return make<T>(d, a, b);
}

/// Random diagonally dominant double matrix (well-conditioned).
inline TridiagonalMatrix<double> random_dominant_matrix(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> bump(0.0, 1.0);
    std::vector<double> d, a, b;
    for (int i = 0; i < n - 1; ++i) {
        a.push_back(off(rng));
        b.push_back(off(rng));
    }
    for (int i = 0; i < n; ++i) {
        double v = 3.0 + bump(rng);
        d.push_back(rng() % 2 ? v : -v);
    }
    return TridiagonalMatrix<double>(std::move(d), std::move(a), std::move(b));
}

} // namespace support
