#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "tridkit/flops.hpp"
#include "tridkit/inverse.hpp"
#include "tridkit/minors.hpp"
#include "tridkit/oracle.hpp"
#include "tridkit/tridiagonal.hpp"

namespace tridkit {

/// One benchmark measurement. flops is the exact scalar-operation count of
/// a single run (deterministic for fixed n, op and seed, measured with the
/// Counted instrumentation); nanos is average wall time per repetition,
/// timed un-instrumented.
struct BenchRecord {
    int n = 0;
    std::string op;
    std::uint64_t flops = 0;
    std::uint64_t nanos = 0;
    int reps = 0;
};

namespace detail {

/// Seeded diagonally dominant instance: off-diagonals in [-1, 1], diagonal
/// magnitudes in [3, 4]. Well-conditioned, never breaks down.
inline TridiagonalMatrix<double> bench_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n)));
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

template <class T>
TridiagonalMatrix<T> cast_matrix(const TridiagonalMatrix<double>& A) {
    auto cast_band = [](const std::vector<double>& band) {
        std::vector<T> out;
        out.reserve(band.size());
        for (double v : band) out.push_back(scalar_traits<T>::from_double(v));
        return out;
    };
    return TridiagonalMatrix<T>(cast_band(A.diag_band()), cast_band(A.super_band()),
                                cast_band(A.sub_band()));
}

inline volatile double bench_sink = 0.0;

} // namespace detail

/// Run the named operations over seeded instances of the given sizes.
/// Known ops: "determinant" (linear work), "invert" (quadratic),
/// "dense_inverse" (cubic; sizes above 512 are skipped).
///
/// The inverse runs in the wide-exponent scaled arithmetic: the principal
/// minors of these instances overflow plain doubles somewhere past order
/// 600, while the scaled scalars carry any order. Determinant and the
/// dense oracle run in plain doubles.
inline std::vector<BenchRecord> run_bench(const std::vector<int>& sizes,
                                          const std::vector<std::string>& ops,
                                          std::uint64_t seed = 42) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;

    for (int n : sizes) {
        TridiagonalMatrix<double> A = detail::bench_matrix(n, seed);

        for (const std::string& op : ops) {
            BenchRecord rec;
            rec.n = n;
            rec.op = op;

            double work = 0;
            if (op == "determinant") {
                auto C = detail::cast_matrix<Counted<double>>(A);
                flops::reset();
                detail::bench_sink = determinant(C).value;
                rec.flops = flops::counter().total();
                work = n;
            } else if (op == "invert") {
                auto C = detail::cast_matrix<Counted<Scaled>>(A);
                flops::reset();
                detail::bench_sink = invert(C).at(1, 1).value.to_double();
                rec.flops = flops::counter().total();
                work = static_cast<double>(n) * n;
            } else if (op == "dense_inverse") {
                if (n > 512) continue;
                auto C = detail::cast_matrix<Counted<double>>(A);
                flops::reset();
                detail::bench_sink = dense_inverse(to_dense(C)).at(1, 1).value;
                rec.flops = flops::counter().total();
                work = static_cast<double>(n) * n * n;
            } else {
                continue;
            }

            rec.reps = static_cast<int>(
                std::clamp(4.0e6 / std::max(work, 1.0), 1.0, 1000.0));
            auto scaled = detail::cast_matrix<Scaled>(A);
            auto start = clock::now();
            for (int r = 0; r < rec.reps; ++r) {
                if (op == "determinant") {
                    detail::bench_sink = determinant(A);
                } else if (op == "invert") {
                    detail::bench_sink = invert(scaled).at(1, 1).to_double();
                } else {
                    detail::bench_sink = dense_inverse(to_dense(A)).at(1, 1);
                }
            }
            auto elapsed =
                std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
            rec.nanos = static_cast<std::uint64_t>(elapsed.count()) /
                        static_cast<std::uint64_t>(rec.reps);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

inline const std::vector<std::string>& default_bench_ops() {
    static const std::vector<std::string> ops = {"determinant", "invert",
                                                 "dense_inverse"};
    return ops;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "n,op,flops,nanos,reps\n";
    for (const BenchRecord& r : records)
        out << r.n << ',' << r.op << ',' << r.flops << ',' << r.nanos << ','
            << r.reps << '\n';
}

} // namespace tridkit
