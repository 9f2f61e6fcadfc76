#pragma once

#include "relosc/pruefer.hpp"

#include <cstdint>
#include <vector>

namespace relosc {

enum class IntervalConvention : std::uint8_t {
    closed,     // [m,n]: plain sum of marks
    left_open,  // (m,n]: subtract 1 when W_m = 0
    right_open, // [m,n): add 1 when W_n = 0
    open,       // (m,n): both corrections
};

inline const char* convention_name(IntervalConvention c) {
    switch (c) {
        case IntervalConvention::closed: return "[m,n]";
        case IntervalConvention::left_open: return "(m,n]";
        case IntervalConvention::right_open: return "[m,n)";
        default: return "(m,n)";
    }
}

/// Modified Wronskian W_n = u0(n) a1(n) u1(n+1) - u1(n) a0(n) u0(n+1) for
/// n = 0..N, with exact signs and the weighted node mark of every site.
template <ScalarType S>
struct WronskianPath {
    std::vector<S> w;                    // 0..N
    std::vector<std::int8_t> w_sign;     // 0..N
    std::vector<std::int8_t> marks;      // 0..N-1
    std::vector<std::int8_t> uprod_sign; // sign(u0(n+1) u1(n+1)) for n = 0..N-1
    bool sign_uncertain = false;
    long band_hits = 0;

    int N() const { return static_cast<int>(w.size()) - 1; }
};

namespace detail {

/// The counting method: +1, -1 or 0 from the signs of W_n, W_{n+1} and
/// u0(n+1) u1(n+1).
inline int mark_from_signs(int w_n, int w_n1, int uprod) {
    bool flip = w_n * w_n1 < 0;
    if (uprod != 0) {
        if (w_n1 * uprod > 0 && (flip || (w_n == 0 && w_n1 != 0))) return 1;
        if (w_n * uprod > 0 && (flip || (w_n != 0 && w_n1 == 0))) return -1;
    }
    return 0;
}

} // namespace detail

/// Builds the Wronskian path of two solutions over possibly different
/// operators (any spectral parameters; no internal b-shift). Float mode
/// compares the two bilinear terms exponent-aware and declares W_n = 0 only
/// inside the relative zero band.
template <ScalarType S>
WronskianPath<S> wronskian_path(const Coefficients<S>& c0, const Coefficients<S>& c1,
                                const SolutionPath<S>& u0, const SolutionPath<S>& u1) {
    if (c0.N() != c1.N() || u0.N() != c0.N() || u1.N() != c0.N())
        throw std::invalid_argument("wronskian_path: operators and solutions must share N");
    const int n_total = c0.N();
    WronskianPath<S> p;
    p.sign_uncertain = u0.sign_uncertain || u1.sign_uncertain;
    p.band_hits = u0.band_hits + u1.band_hits;
    p.w.resize(static_cast<size_t>(n_total) + 1);
    p.w_sign.resize(static_cast<size_t>(n_total) + 1);
    p.marks.resize(static_cast<size_t>(n_total));
    p.uprod_sign.resize(static_cast<size_t>(n_total));
    const int band = c0.zero_band_exp;
    for (int n = 0; n <= n_total; ++n) {
        S t1 = u0.at(n) * c1.a(n) * u1.at(n + 1);
        S t2 = u1.at(n) * c0.a(n) * u0.at(n + 1);
        bool hit = false;
        S w = snap_to_zero(t1 - t2, max_magnitude(t1, t2), band, hit);
        if (hit) {
            p.sign_uncertain = true;
            ++p.band_hits;
        }
        p.w_sign[static_cast<size_t>(n)] = static_cast<std::int8_t>(sign_of(w));
        p.w[static_cast<size_t>(n)] = std::move(w);
    }
    for (int n = 0; n < n_total; ++n) {
        int uprod = sign_of(u0.at(n + 1)) * sign_of(u1.at(n + 1));
        p.uprod_sign[static_cast<size_t>(n)] = static_cast<std::int8_t>(uprod);
        p.marks[static_cast<size_t>(n)] = static_cast<std::int8_t>(detail::mark_from_signs(
            p.w_sign[static_cast<size_t>(n)], p.w_sign[static_cast<size_t>(n) + 1], uprod));
    }
    return p;
}

/// Weighted node mark #_n of the Wronskian, n in 0..N-1.
template <ScalarType S>
int weighted_node_mark(const WronskianPath<S>& p, int n) {
    return p.marks[static_cast<size_t>(n)];
}

/// Interval count over one of the four boundary conventions.
template <ScalarType S>
long interval_count(const WronskianPath<S>& p, int m, int n, IntervalConvention conv) {
    if (!(0 <= m && m < n && n <= p.N()))
        throw std::invalid_argument("interval_count: need 0 <= m < n <= N");
    long sum = 0;
    for (int j = m; j < n; ++j) sum += p.marks[static_cast<size_t>(j)];
    bool wm0 = p.w_sign[static_cast<size_t>(m)] == 0;
    bool wn0 = p.w_sign[static_cast<size_t>(n)] == 0;
    switch (conv) {
        case IntervalConvention::closed: return sum;
        case IntervalConvention::left_open: return sum - (wm0 ? 1 : 0);
        case IntervalConvention::right_open: return sum + (wn0 ? 1 : 0);
        default: return sum - (wm0 ? 1 : 0) + (wn0 ? 1 : 0);
    }
}

/// Green's formula residual over the window [n-1, m] for two solutions at the
/// same spectral parameter z:
///   [W_m - W_{n-1}]
///   - sum_{j=n-1}^{m-1} (a0-a1)(j) (u0(j+1)u1(j) + u0(j)u1(j+1))
///   - sum_{j=n}^{m}     (b0-b1)(j) u0(j)u1(j).
/// Identically zero; deviations measure float rounding.
template <ScalarType S>
S greens_residual(const Coefficients<S>& c0, const Coefficients<S>& c1,
                  const SolutionPath<S>& u0, const SolutionPath<S>& u1, int n, int m) {
    if (!(1 <= n && n <= m && m <= c0.N()))
        throw std::invalid_argument("greens_residual: need 1 <= n <= m <= N");
    if (!(u0.z == u1.z))
        throw std::invalid_argument("greens_residual: solutions must share z");
    auto w_at = [&](int j) {
        return u0.at(j) * c1.a(j) * u1.at(j + 1) - u1.at(j) * c0.a(j) * u0.at(j + 1);
    };
    S total = w_at(m) - w_at(n - 1);
    for (int j = n - 1; j <= m - 1; ++j) {
        S da = c0.a(j) - c1.a(j);
        total = total - da * (u0.at(j + 1) * u1.at(j) + u0.at(j) * u1.at(j + 1));
    }
    for (int j = n; j <= m; ++j) {
        S db = c0.b(j) - c1.b(j);
        total = total - db * (u0.at(j) * u1.at(j));
    }
    return total;
}

/// Mark read from the Delta path: ceil(Delta(n+1)/pi) - ceil(Delta(n)/pi).
inline int mark_via_pruefer(const DeltaPath& d, int n) {
    return static_cast<int>(d.at(n + 1).ceil_pi - d.at(n).ceil_pi);
}

/// Interval count evaluated through the Delta path, for cross-checking the
/// sign-based route:
///   [m,n]: ceil(D(n)) - ceil(D(m))        (m,n]: ceil(D(n)) - floor(D(m)) - 1
///   [m,n): floor(D(n)) - ceil(D(m)) + 1   (m,n): floor(D(n)) - floor(D(m))
inline long interval_count_via_delta(const DeltaPath& d, int m, int n, IntervalConvention conv) {
    const auto& dm = d.at(m);
    const auto& dn = d.at(n);
    switch (conv) {
        case IntervalConvention::closed: return static_cast<long>(dn.ceil_pi - dm.ceil_pi);
        case IntervalConvention::left_open: return static_cast<long>(dn.ceil_pi - dm.floor_pi() - 1);
        case IntervalConvention::right_open: return static_cast<long>(dn.floor_pi() - dm.ceil_pi + 1);
        default: return static_cast<long>(dn.floor_pi() - dm.floor_pi());
    }
}

} // namespace relosc
