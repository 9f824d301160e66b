#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace tridkit {

/// Floating scalar with a wide exponent: value = significand * 2^exponent,
/// where the significand is 0 or has magnitude in [1, 2). Every operation
/// renormalizes, so the exponent absorbs magnitude and products of many
/// minors never overflow the way plain doubles do.
class Scaled {
public:
    Scaled() = default;

    explicit Scaled(double v) {
        if (v == 0.0) return;
        if (!std::isfinite(v))
            throw std::domain_error("Scaled: non-finite value");
        int e = 0;
        double m = std::frexp(v, &e); // |m| in [0.5, 1)
        sig_ = m * 2.0;
        exp_ = e - 1;
    }

    static Scaled from_parts(double significand, std::int64_t exponent) {
        Scaled out;
        if (significand == 0.0) return out;
        int e = 0;
        double m = std::frexp(significand, &e);
        out.sig_ = m * 2.0;
        out.exp_ = exponent + e - 1;
        return out;
    }

    double significand() const { return sig_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return sig_ == 0.0; }
    int sign() const { return sig_ == 0.0 ? 0 : (sig_ < 0.0 ? -1 : 1); }

    Scaled abs() const {
        Scaled out = *this;
        out.sig_ = std::fabs(out.sig_);
        return out;
    }

    Scaled operator-() const {
        Scaled out = *this;
        out.sig_ = -out.sig_;
        return out;
    }

    /// Collapses to a plain double; saturates to +-inf / 0 outside range.
    double to_double() const {
        if (sig_ == 0.0) return 0.0;
        if (exp_ > 1100) return sig_ < 0 ? -HUGE_VAL : HUGE_VAL;
        if (exp_ < -1100) return sig_ < 0 ? -0.0 : 0.0;
        return std::ldexp(sig_, static_cast<int>(exp_));
    }

    friend Scaled operator+(const Scaled& a, const Scaled& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const std::int64_t e = a.exp_ >= b.exp_ ? a.exp_ : b.exp_;
        double sum = shifted(a, e) + shifted(b, e);
        return from_parts(sum, e);
    }

    friend Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

    friend Scaled operator*(const Scaled& a, const Scaled& b) {
        if (a.is_zero() || b.is_zero()) return Scaled{};
        return from_parts(a.sig_ * b.sig_, a.exp_ + b.exp_);
    }

    friend Scaled operator/(const Scaled& a, const Scaled& b) {
        if (b.is_zero()) throw std::domain_error("Scaled: division by zero");
        if (a.is_zero()) return Scaled{};
        return from_parts(a.sig_ / b.sig_, a.exp_ - b.exp_);
    }

    Scaled& operator+=(const Scaled& o) { return *this = *this + o; }
    Scaled& operator-=(const Scaled& o) { return *this = *this - o; }
    Scaled& operator*=(const Scaled& o) { return *this = *this * o; }
    Scaled& operator/=(const Scaled& o) { return *this = *this / o; }

    friend bool operator==(const Scaled& a, const Scaled& b) {
        return a.sig_ == b.sig_ && a.exp_ == b.exp_;
    }

    friend std::partial_ordering operator<=>(const Scaled& a, const Scaled& b) {
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa <=> sb;
        if (sa == 0) return std::partial_ordering::equivalent;
        // same sign: order by magnitude (exponent, then significand)
        std::partial_ordering mag =
            a.exp_ != b.exp_ ? (a.exp_ <=> b.exp_)
                             : (std::fabs(a.sig_) <=> std::fabs(b.sig_));
        if (sa > 0) return mag;
        if (mag == std::partial_ordering::less) return std::partial_ordering::greater;
        if (mag == std::partial_ordering::greater) return std::partial_ordering::less;
        return mag;
    }

private:
    double sig_ = 0.0;       // 0 or magnitude in [1, 2)
    std::int64_t exp_ = 0;   // base-2 exponent

    // significand of x expressed at exponent e >= x.exp_; exact for small
    // shifts, underflows to 0 once the gap exceeds double range
    static double shifted(const Scaled& x, std::int64_t e) {
        std::int64_t gap = e - x.exp_;
        if (gap > 1100) return 0.0;
        return std::ldexp(x.sig_, static_cast<int>(-gap));
    }
};

} // namespace tridkit
