#pragma once

#include "relosc/rational.hpp"
#include "relosc/scaled_float.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>

namespace relosc {

enum class Mode { exact, floating };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

/// Numeric contract shared by all modules: signed scalar with a total, exact
/// sign. Realized by Rational (exact) and ScaledFloat (overflow-safe float).
template <typename S>
concept ScalarType =
    std::same_as<S, Rational> || std::same_as<S, ScaledFloat>;

template <ScalarType S>
constexpr Mode mode_of() {
    return std::same_as<S, Rational> ? Mode::exact : Mode::floating;
}

template <ScalarType S>
inline int sign_of(const S& x) { return x.sign(); }

inline ScaledFloat to_scaled_float(const Rational& r) {
    if (r.is_zero()) return ScaledFloat();
    auto [m, e] = r.to_double_2exp();
    return ScaledFloat(m, e);
}

/// Exact: a ScaledFloat mantissa is dyadic.
inline Rational to_rational(const ScaledFloat& x) {
    if (x.is_zero()) return Rational(0);
    mpq_class q(x.mantissa());
    auto e = x.exponent();
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(std::move(q));
}

template <ScalarType S>
S scalar_from_rational(const Rational& r);
template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) { return r; }
template <>
inline ScaledFloat scalar_from_rational<ScaledFloat>(const Rational& r) { return to_scaled_float(r); }

inline std::string scalar_to_string(const Rational& r) { return r.to_string(); }
inline std::string scalar_to_string(const ScaledFloat& x) { return x.to_string(); }

/// Zero decision for a computed float value. A result x of a cancellation-prone
/// expression counts as zero iff |x| <= 2^band_exp * scale, where scale is the
/// largest magnitude entering the expression. A nonzero value inside the band
/// is snapped to zero and reported via `hit`; an exact 0.0 is a clean zero
/// (dyadic inputs cancel exactly). Exact mode is a no-op.
inline Rational snap_to_zero(const Rational& x, const Rational& /*scale*/, int /*band_exp*/, bool& /*hit*/) {
    return x;
}
inline ScaledFloat snap_to_zero(const ScaledFloat& x, const ScaledFloat& scale, int band_exp, bool& hit) {
    if (x.is_zero() || scale.is_zero()) return x;
    if (compare_magnitude(x, scale.ldexp_by(band_exp)) <= 0) {
        hit = true;
        return ScaledFloat();
    }
    return x;
}

template <ScalarType S>
inline S max_magnitude(const S& a, const S& b);
template <>
inline Rational max_magnitude(const Rational& a, const Rational& b) {
    Rational aa = a.abs(), bb = b.abs();
    return aa >= bb ? aa : bb;
}
template <>
inline ScaledFloat max_magnitude(const ScaledFloat& a, const ScaledFloat& b) {
    return compare_magnitude(a, b) >= 0 ? a.abs() : b.abs();
}

/// Renders x and y as doubles scaled by a common power of two so their ratio
/// survives even when both overflow the double range. For angle diagnostics.
inline void to_scaled_double_pair(const Rational& x, const Rational& y, double& dx, double& dy) {
    auto [mx, ex] = x.to_double_2exp();
    auto [my, ey] = y.to_double_2exp();
    if (x.is_zero()) { dx = 0.0; dy = y.is_zero() ? 0.0 : my; return; }
    if (y.is_zero()) { dy = 0.0; dx = mx; return; }
    long e = std::max(ex, ey);
    dx = std::ldexp(mx, static_cast<int>(std::max(ex - e, -200L)));
    dy = std::ldexp(my, static_cast<int>(std::max(ey - e, -200L)));
}
inline void to_scaled_double_pair(const ScaledFloat& x, const ScaledFloat& y, double& dx, double& dy) {
    if (x.is_zero()) { dx = 0.0; dy = y.is_zero() ? 0.0 : y.mantissa(); return; }
    if (y.is_zero()) { dy = 0.0; dx = x.mantissa(); return; }
    std::int64_t e = std::max(x.exponent(), y.exponent());
    dx = std::ldexp(x.mantissa(), static_cast<int>(std::max(x.exponent() - e, std::int64_t(-200))));
    dy = std::ldexp(y.mantissa(), static_cast<int>(std::max(y.exponent() - e, std::int64_t(-200))));
}

} // namespace relosc
