#pragma once

#include <cmath>
#include <cstdlib>

#include "tridkit/flops.hpp"
#include "tridkit/rational.hpp"
#include "tridkit/scaled.hpp"

namespace tridkit {

/// Which arithmetic a run computes in. Chosen per call site (CLI flag or
/// TRIDKIT_MODE), never auto-detected, so runs are reproducible.
enum class ScalarMode { Double, RationalExact, ScaledFloat };

inline const char* mode_name(ScalarMode m) {
    switch (m) {
        case ScalarMode::Double: return "double";
        case ScalarMode::RationalExact: return "rational";
        case ScalarMode::ScaledFloat: return "scaled";
    }
    return "unknown";
}

/// Uniform scalar interface for the generic kernels. Exact scalars ignore
/// tolerances and compare against true zero; inexact ones support the
/// relative breakdown and singularity tests.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long long v) { return static_cast<double>(v); }
    static double from_double(double v) { return v; }
    static bool is_zero(double v) { return v == 0.0; }
    static double abs(double v) { return std::fabs(v); }
    static int sign(double v) { return v == 0.0 ? 0 : (v < 0.0 ? -1 : 1); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long v) { return Rational(v); }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational abs(const Rational& v) { return v.abs(); }
    static int sign(const Rational& v) { return v.sign(); }
};

template <>
struct scalar_traits<Scaled> {
    static constexpr bool is_exact = false;
    static Scaled zero() { return Scaled(); }
    static Scaled one() { return Scaled(1.0); }
    static Scaled from_int(long long v) { return Scaled(static_cast<double>(v)); }
    static Scaled from_double(double v) { return Scaled(v); }
    static bool is_zero(const Scaled& v) { return v.is_zero(); }
    static Scaled abs(const Scaled& v) { return v.abs(); }
    static int sign(const Scaled& v) { return v.sign(); }
};

template <class T>
struct scalar_traits<Counted<T>> {
    static constexpr bool is_exact = scalar_traits<T>::is_exact;
    static Counted<T> zero() { return {scalar_traits<T>::zero()}; }
    static Counted<T> one() { return {scalar_traits<T>::one()}; }
    static Counted<T> from_int(long long v) { return {scalar_traits<T>::from_int(v)}; }
    static Counted<T> from_double(double v) {
        return {scalar_traits<T>::from_double(v)};
    }
    static bool is_zero(const Counted<T>& v) { return scalar_traits<T>::is_zero(v.value); }
    static Counted<T> abs(const Counted<T>& v) { return {scalar_traits<T>::abs(v.value)}; }
    static int sign(const Counted<T>& v) { return scalar_traits<T>::sign(v.value); }
};

/// Breakdown test for a pivot: exact scalars test true zero; inexact ones
/// test |pivot| <= tol * scale, where scale carries the magnitudes of the
/// two summands that formed the pivot. tol = 0 degenerates to the exact
/// test in every mode.
template <class T>
bool pivot_vanishes(const T& pivot, const T& scale, double tol) {
    using traits = scalar_traits<T>;
    if constexpr (traits::is_exact) {
        (void)scale;
        (void)tol;
        return traits::is_zero(pivot);
    } else {
        if (tol == 0.0) return traits::is_zero(pivot);
        return !(traits::abs(pivot) > traits::from_double(tol) * scale);
    }
}

} // namespace tridkit
