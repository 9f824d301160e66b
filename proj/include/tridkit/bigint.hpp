#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tridkit {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation over little-endian 32-bit limbs with no
/// leading zero limbs; zero is the empty magnitude. Division truncates
/// toward zero, so (a/b)*b + a%b == a and the remainder takes the sign of
/// the dividend.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid overflow on LLONG_MIN
        std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                                  : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(mag));
        if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    /// Parse an optionally signed decimal string.
    static BigInt from_string(std::string_view text) {
        std::size_t pos = 0;
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos == text.size())
            throw std::invalid_argument("BigInt: empty numeral");
        BigInt out;
        // consume 9 decimal digits at a time: out = out*10^k + chunk
        while (pos < text.size()) {
            std::uint32_t chunk = 0;
            std::uint32_t scale = 1;
            std::size_t taken = 0;
            while (taken < 9 && pos < text.size()) {
                char ch = text[pos];
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("BigInt: bad digit in numeral");
                chunk = chunk * 10 + static_cast<std::uint32_t>(ch - '0');
                scale *= 10;
                ++pos;
                ++taken;
            }
            out.mul_small_add(scale, chunk);
        }
        if (!out.mag_.empty()) out.sign_ = sign;
        return out;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    bool is_one() const {
        return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
    }

    BigInt operator-() const {
        BigInt out = *this;
        out.sign_ = -out.sign_;
        return out;
    }

    BigInt abs() const {
        BigInt out = *this;
        if (out.sign_ < 0) out.sign_ = 1;
        return out;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt out;
        if (a.sign_ == b.sign_) {
            out.mag_ = add_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
            return out;
        }
        int cmp = cmp_mag(a.mag_, b.mag_);
        if (cmp == 0) return out; // exact cancellation
        if (cmp > 0) {
            out.mag_ = sub_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
        } else {
            out.mag_ = sub_mag(b.mag_, a.mag_);
            out.sign_ = b.sign_;
        }
        return out;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt out;
        if (a.sign_ == 0 || b.sign_ == 0) return out;
        out.mag_ = mul_mag(a.mag_, b.mag_);
        out.sign_ = a.sign_ * b.sign_;
        return out;
    }

    /// Truncated quotient and remainder; throws on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        quot = BigInt{};
        rem = BigInt{};
        if (a.sign_ == 0) return;
        divmod_mag(a.mag_, b.mag_, quot.mag_, rem.mag_);
        if (!quot.mag_.empty()) quot.sign_ = a.sign_ * b.sign_;
        if (!rem.mag_.empty()) rem.sign_ = a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    /// Nonnegative greatest common divisor; gcd(0, 0) == 0.
    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int cmp = cmp_mag(a.mag_, b.mag_) * a.sign_;
        return cmp <=> 0;
    }

    /// |a| <=> |b|
    std::strong_ordering compare_magnitude(const BigInt& o) const {
        return cmp_mag(mag_, o.mag_) <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint32_t rem = div_small_inplace(work, 1000000000u);
            std::string chunk = std::to_string(rem);
            if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    // *this = *this * scale + addend, magnitudes only (used by from_string)
    void mul_small_add(std::uint32_t scale, std::uint32_t addend) {
        std::uint64_t carry = addend;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * scale + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            mag_.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
    }

    static int countl_zero32(std::uint32_t x) {
        if (x == 0) return 32;
        int n = 0;
        while (!(x & 0x80000000u)) {
            x <<= 1;
            ++n;
        }
        return n;
    }

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() >= b.size() ? b : a;
        const auto& hi = a.size() >= b.size() ? a : b;
        std::vector<std::uint32_t> out;
        out.reserve(hi.size() + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            out.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) out.push_back(static_cast<std::uint32_t>(carry));
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out;
        out.reserve(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += (std::int64_t{1} << 32);
            out.push_back(static_cast<std::uint32_t>(cur));
        }
        trim(out);
        return out;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] +
                                    out[i + j] + carry;
                out[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            for (std::size_t k = i + b.size(); carry; ++k) {
                std::uint64_t cur = out[k] + carry;
                out[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
        }
        trim(out);
        return out;
    }

    // in-place magnitude division by a single limb, returns remainder
    static std::uint32_t div_small_inplace(std::vector<std::uint32_t>& m,
                                           std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    // Knuth algorithm D over 32-bit limbs
    static void divmod_mag(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            trim(r);
            return;
        }
        if (v.size() == 1) {
            q = u;
            std::uint32_t rem = div_small_inplace(q, v[0]);
            if (rem) r.push_back(rem);
            return;
        }

        const std::size_t n = v.size();
        const int s = countl_zero32(v.back());

        std::vector<std::uint32_t> vn(n);
        for (std::size_t i = n; i-- > 1;)
            vn[i] = (v[i] << s) | (s ? (v[i - 1] >> (32 - s)) : 0u);
        vn[0] = v[0] << s;

        std::vector<std::uint32_t> un(u.size() + 1, 0);
        if (s) {
            un[u.size()] = u.back() >> (32 - s);
            for (std::size_t i = u.size(); i-- > 1;)
                un[i] = (u[i] << s) | (u[i - 1] >> (32 - s));
            un[0] = u[0] << s;
        } else {
            std::copy(u.begin(), u.end(), un.begin());
        }

        const std::size_t m = u.size() - n;
        q.assign(m + 1, 0);
        const std::uint64_t base = std::uint64_t{1} << 32;

        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1];
            std::uint64_t rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }

            // multiply and subtract
            std::uint64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                std::uint64_t sub = (p & 0xffffffffu) + borrow;
                std::uint64_t limb = un[i + j];
                if (limb < sub) {
                    un[i + j] = static_cast<std::uint32_t>(limb + base - sub);
                    borrow = 1;
                } else {
                    un[i + j] = static_cast<std::uint32_t>(limb - sub);
                    borrow = 0;
                }
            }
            std::uint64_t top_sub = carry + borrow;
            bool negative = un[j + n] < top_sub;
            un[j + n] = static_cast<std::uint32_t>(
                negative ? un[j + n] + base - top_sub : un[j + n] - top_sub);

            q[j] = static_cast<std::uint32_t>(qhat);
            if (negative) {
                // qhat was one too large: add divisor back
                --q[j];
                std::uint64_t add_carry = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + add_carry;
                    un[i + j] = static_cast<std::uint32_t>(cur);
                    add_carry = cur >> 32;
                }
                un[j + n] = static_cast<std::uint32_t>(un[j + n] + add_carry);
            }
        }

        trim(q);
        r.assign(un.begin(), un.begin() + n);
        if (s) {
            for (std::size_t i = 0; i + 1 < n; ++i)
                r[i] = (r[i] >> s) | (r[i + 1] << (32 - s));
            r[n - 1] >>= s;
        }
        trim(r);
    }
};

} // namespace tridkit
