#pragma once

#include <compare>
#include <cstdint>

namespace tridkit {
namespace flops {

/// Per-thread scalar operation tallies.
struct Counts {
    std::uint64_t add = 0;
    std::uint64_t sub = 0;
    std::uint64_t mul = 0;
    std::uint64_t div = 0;

    std::uint64_t total() const { return add + sub + mul + div; }
};

inline Counts& counter() {
    thread_local Counts c;
    return c;
}

inline void reset() { counter() = Counts{}; }

} // namespace flops

/// Arithmetic wrapper that tallies every +, -, *, / into flops::counter().
///
/// The kernels are scalar-generic, so instantiating them with
/// Counted<double> measures exact operation counts while the plain double
/// instantiation stays un-instrumented. Negation and comparisons are free.
template <class T>
struct Counted {
    T value{};

    Counted() = default;
    Counted(T v) : value(v) {}

    friend Counted operator+(Counted a, Counted b) {
        ++flops::counter().add;
        return {a.value + b.value};
    }
    friend Counted operator-(Counted a, Counted b) {
        ++flops::counter().sub;
        return {a.value - b.value};
    }
    friend Counted operator*(Counted a, Counted b) {
        ++flops::counter().mul;
        return {a.value * b.value};
    }
    friend Counted operator/(Counted a, Counted b) {
        ++flops::counter().div;
        return {a.value / b.value};
    }

    Counted operator-() const { return {-value}; }

    Counted& operator+=(Counted o) { return *this = *this + o; }
    Counted& operator-=(Counted o) { return *this = *this - o; }
    Counted& operator*=(Counted o) { return *this = *this * o; }
    Counted& operator/=(Counted o) { return *this = *this / o; }

    friend bool operator==(Counted a, Counted b) { return a.value == b.value; }
    friend auto operator<=>(Counted a, Counted b) { return a.value <=> b.value; }
};

} // namespace tridkit
