#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace relosc {

/// Arbitrary-precision rational scalar. Every arithmetic result is kept in
/// canonical form, so sign queries and comparisons are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Exact value of a double (doubles are dyadic rationals).
    static Rational from_double(double d);

    /// Accepts "p/q", integer, and plain decimal forms ("-3/4", "12", "-1.5").
    static Rational from_string(std::string_view s);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p" when the denominator is 1, else "p/q".
    std::string to_string() const;

    double to_double() const { return v_.get_d(); }

    /// value = m * 2^e with |m| in [0.5, 1); overflow-safe for huge values.
    std::pair<double, long> to_double_2exp() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace relosc
