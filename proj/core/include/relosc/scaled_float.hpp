#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace relosc {

/// Floating scalar with a separate base-2 exponent: value = m * 2^e where the
/// mantissa m is a double with |m| in [1,2) (or m == 0). Three-term
/// recurrences grow exponentially; the int64 exponent keeps sign data valid
/// far beyond the double range.
class ScaledFloat {
public:
    ScaledFloat() = default;
    ScaledFloat(long v) : ScaledFloat(static_cast<double>(v), 0) {} // NOLINT: implicit by design
    ScaledFloat(double mantissa, std::int64_t exp) { assign_normalized(mantissa, exp); }

    static ScaledFloat from_double(double d) { return ScaledFloat(d, 0); }

    int sign() const { return m_ > 0.0 ? 1 : (m_ < 0.0 ? -1 : 0); }
    bool is_zero() const { return m_ == 0.0; }

    double mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }

    ScaledFloat operator-() const { ScaledFloat r; r.m_ = -m_; r.e_ = e_; return r; }
    ScaledFloat abs() const { ScaledFloat r; r.m_ = std::fabs(m_); r.e_ = e_; return r; }

    /// value * 2^shift, exact.
    ScaledFloat ldexp_by(std::int64_t shift) const {
        if (is_zero()) return *this;
        ScaledFloat r; r.m_ = m_; r.e_ = e_ + shift; return r;
    }

    friend ScaledFloat operator+(const ScaledFloat& a, const ScaledFloat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const ScaledFloat& hi = (a.e_ >= b.e_) ? a : b;
        const ScaledFloat& lo = (a.e_ >= b.e_) ? b : a;
        std::int64_t d = hi.e_ - lo.e_;
        int shift = d > 4000 ? 4000 : static_cast<int>(d);
        double m = hi.m_ + std::ldexp(lo.m_, -shift);
        return ScaledFloat(m, hi.e_);
    }
    friend ScaledFloat operator-(const ScaledFloat& a, const ScaledFloat& b) { return a + (-b); }
    friend ScaledFloat operator*(const ScaledFloat& a, const ScaledFloat& b) {
        if (a.is_zero() || b.is_zero()) return ScaledFloat();
        return ScaledFloat(a.m_ * b.m_, a.e_ + b.e_);
    }
    friend ScaledFloat operator/(const ScaledFloat& a, const ScaledFloat& b);

    ScaledFloat& operator+=(const ScaledFloat& o) { *this = *this + o; return *this; }
    ScaledFloat& operator-=(const ScaledFloat& o) { *this = *this - o; return *this; }
    ScaledFloat& operator*=(const ScaledFloat& o) { *this = *this * o; return *this; }
    ScaledFloat& operator/=(const ScaledFloat& o) { *this = *this / o; return *this; }

    /// Total order; normal forms are unique so this is exact.
    friend int compare(const ScaledFloat& a, const ScaledFloat& b) {
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        if (sa == 0) return 0;
        int mag = compare_magnitude(a, b);
        return sa > 0 ? mag : -mag;
    }
    /// -1/0/+1 comparing |a| against |b|.
    friend int compare_magnitude(const ScaledFloat& a, const ScaledFloat& b) {
        bool za = a.is_zero(), zb = b.is_zero();
        if (za || zb) return za && zb ? 0 : (za ? -1 : 1);
        if (a.e_ != b.e_) return a.e_ < b.e_ ? -1 : 1;
        double fa = std::fabs(a.m_), fb = std::fabs(b.m_);
        return fa < fb ? -1 : (fa > fb ? 1 : 0);
    }

    friend bool operator==(const ScaledFloat& a, const ScaledFloat& b) { return a.m_ == b.m_ && a.e_ == b.e_; }
    friend bool operator!=(const ScaledFloat& a, const ScaledFloat& b) { return !(a == b); }
    friend bool operator<(const ScaledFloat& a, const ScaledFloat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const ScaledFloat& a, const ScaledFloat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const ScaledFloat& a, const ScaledFloat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const ScaledFloat& a, const ScaledFloat& b) { return compare(a, b) >= 0; }

    /// Saturates to +-inf / 0 outside the double exponent range.
    double to_double() const {
        if (is_zero()) return 0.0;
        std::int64_t e = e_;
        if (e > 1200) e = 1200;
        if (e < -1200) e = -1200;
        return std::ldexp(m_, static_cast<int>(e));
    }

    std::string to_string() const;

private:
    void assign_normalized(double m, std::int64_t e) {
        if (m == 0.0) { m_ = 0.0; e_ = 0; return; }
        int k = 0;
        double f = std::frexp(m, &k); // |f| in [0.5, 1)
        m_ = 2.0 * f;
        e_ = e + k - 1;
    }

    double m_ = 0.0;
    std::int64_t e_ = 0;
};

} // namespace relosc
