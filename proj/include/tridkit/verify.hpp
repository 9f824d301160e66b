#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tridkit/inverse.hpp"
#include "tridkit/minors.hpp"
#include "tridkit/oracle.hpp"
#include "tridkit/scalar.hpp"
#include "tridkit/tridiagonal.hpp"

namespace tridkit {

/// Equality up to mode semantics: exact scalars compare exactly, inexact
/// ones relatively: |x - y| <= cmp_tol * max(1, |x|, |y|).
template <class T>
bool values_close(const T& x, const T& y, double cmp_tol) {
    using traits = scalar_traits<T>;
    if constexpr (traits::is_exact) {
        (void)cmp_tol;
        return x == y;
    } else {
        T scale = traits::one();
        if (scale < traits::abs(x)) scale = traits::abs(x);
        if (scale < traits::abs(y)) scale = traits::abs(y);
        return !(traits::abs(x - y) > traits::from_double(cmp_tol) * scale);
    }
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool pass() const {
        for (const VerifyCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Differential verification of one matrix: the hybrid scans against the
/// dense oracle, the scan duality and minor identity, and (when the input
/// is nonsingular) all inverse formulas against the Gauss-Jordan oracle,
/// the zero-structure mask and the symmetry property. Exact in rational
/// mode; inexact modes compare within cmp_tol.
template <class T>
VerifyReport verify_matrix(const TridiagonalMatrix<T>& A, double tol = 0.0,
                           double cmp_tol = 1e-8) {
    using traits = scalar_traits<T>;
    const int n = A.order();
    VerifyReport report;
    auto add = [&](std::string name, bool pass, std::string note = "") {
        report.checks.push_back({std::move(name), pass, std::move(note)});
    };

    MinorTables<T> t = minor_tables(A, tol);
    DenseMatrix<T> dense = to_dense(A);

    T det_oracle = dense_determinant(dense);
    add("determinant-vs-oracle", values_close(t.determinant(), det_oracle, cmp_tol));
    add("scan-duality", values_close(t.determinant(), t.trailing_minor(1), cmp_tol));

    bool identity_ok = true;
    for (int k = 1; k <= n; ++k) {
        T lhs = t.leading_minor(k) * t.trailing_minor(k + 1) -
                A.diag(k) * t.leading_minor(k - 1) * t.trailing_minor(k + 1) +
                t.leading_minor(k - 1) * t.trailing_minor(k);
        if (!values_close(lhs, t.determinant(), cmp_tol)) identity_ok = false;
    }
    add("minor-identity", identity_ok);

    bool mirrored = is_centrosymmetric(A);
    if (mirrored) {
        bool ok = true;
        for (int i = 0; i <= n; ++i)
            if (!values_close(t.leading_minor(i), t.trailing_minor(n + 1 - i), cmp_tol))
                ok = false;
        add("centrosymmetric-minors", ok);
    }

    std::optional<InverseMatrix<T>> direct;
    try {
        direct.emplace(invert(A, tol));
    } catch (const SingularMatrixError&) {
        add("singular-input", traits::is_zero(det_oracle) ||
                                  values_close(det_oracle, traits::zero(), cmp_tol),
            "inverse checks skipped");
        return report;
    }

    DenseMatrix<T> oracle = dense_inverse(dense);
    auto grids_match = [&](auto&& lookup) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!values_close(lookup(i, j), oracle.at(i, j), cmp_tol)) return false;
        return true;
    };

    add("inverse-vs-oracle",
        grids_match([&](int i, int j) { return direct->at(i, j); }));

    SignedOffdiagonals<T> off(A);
    const T delta = t.determinant();
    add("entry-formula", grids_match([&](int i, int j) {
            return inverse_entry(t, off, delta, i, j);
        }));
    add("delta-sum-formula", grids_match([&](int i, int j) {
            return inverse_entry_deltasum(t, off, delta, i, j);
        }));

    auto recombined = hadamard_recombine(hadamard_factors(A, tol));
    add("hadamard-recombine",
        grids_match([&](int i, int j) { return recombined.at(i, j); }));

    try {
        auto recurrence = invert_pivot_recurrence(A, tol);
        add("pivot-recurrence",
            grids_match([&](int i, int j) { return recurrence.at(i, j); }));
    } catch (const BreakdownError&) {
        add("pivot-recurrence", true, "skipped: pivot vanished");
    }

    BoolGrid mask = zero_structure(A, t);
    bool zeros_ok = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (mask.at(i, j) && !traits::is_zero(direct->at(i, j))) zeros_ok = false;
    add("zero-structure", zeros_ok);

    if (A.is_symmetric()) {
        bool sym_ok = true;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!values_close(direct->at(i, j), direct->at(j, i), cmp_tol))
                    sym_ok = false;
        add("symmetric-inverse", sym_ok);
    }

    return report;
}

} // namespace tridkit
