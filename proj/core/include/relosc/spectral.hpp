#pragma once

#include "relosc/coeffs.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace relosc {

/// Plain symmetric tridiagonal matrix, dim = d.size(). Unlike JacobiMatrixView
/// the off-diagonal signs are unconstrained (difference matrices need that);
/// only their squares enter the minor recursion anyway.
template <ScalarType S>
struct SymTridiag {
    std::vector<S> d;
    std::vector<S> e; // size dim-1
    int dim() const { return static_cast<int>(d.size()); }
};

template <ScalarType S>
SymTridiag<S> tridiag_of(const JacobiMatrixView<S>& v) {
    return SymTridiag<S>{{v.diag.begin(), v.diag.end()}, {v.off.begin(), v.off.end()}};
}

struct SturmResult {
    long count = 0;      // eigenvalues strictly below lambda
    bool membership = false; // p_dim(lambda) = 0, i.e. lambda in the spectrum
    long band_hits = 0;  // float-mode zero-band snaps
};

/// Leading-principal-minor recursion p_k = (d(k) - lambda) p_{k-1} - e(k-1)^2 p_{k-2}
/// with p_0 = 1. For a chain with nonzero off-diagonals no two consecutive
/// minors vanish, and the count of eigenvalues strictly below lambda is the
/// number of k in 1..dim with p_{k-1} = 0 or p_{k-1} p_k < 0 — exact for every
/// lambda, members and leading-block roots included.
template <ScalarType S>
SturmResult sturm_count_below(const SymTridiag<S>& t, const S& lambda, int band_exp = -40) {
    SturmResult r;
    S pm2(0), pm1(1);
    int s_pm1 = 1;
    for (int k = 1; k <= t.dim(); ++k) {
        S t1 = (t.d[static_cast<size_t>(k) - 1] - lambda) * pm1;
        S pk;
        if (k >= 2) {
            const S& off = t.e[static_cast<size_t>(k) - 2];
            if (off.is_zero())
                throw std::invalid_argument("sturm_count_below: zero off-diagonal, split first");
            S t2 = off * off * pm2;
            bool hit = false;
            pk = snap_to_zero(t1 - t2, max_magnitude(t1, t2), band_exp, hit);
            if (hit) ++r.band_hits;
        } else {
            pk = std::move(t1);
        }
        int s_pk = sign_of(pk);
        if (s_pm1 == 0 || s_pm1 * s_pk < 0) ++r.count;
        pm2 = std::move(pm1);
        pm1 = std::move(pk);
        s_pm1 = s_pk;
    }
    r.membership = (s_pm1 == 0);
    return r;
}

/// Count below lambda for a general symmetric tridiagonal: splits into
/// irreducible blocks at zero off-diagonals and sums the block counts.
template <ScalarType S>
SturmResult count_below_splitting(const SymTridiag<S>& t, const S& lambda, int band_exp = -40) {
    SturmResult total;
    int start = 0;
    for (int k = 0; k < t.dim(); ++k) {
        bool block_end = (k == t.dim() - 1) || t.e[static_cast<size_t>(k)].is_zero();
        if (!block_end) continue;
        SymTridiag<S> blk;
        blk.d.assign(t.d.begin() + start, t.d.begin() + k + 1);
        if (k > start) blk.e.assign(t.e.begin() + start, t.e.begin() + k);
        SturmResult r = sturm_count_below(blk, lambda, band_exp);
        total.count += r.count;
        total.membership = total.membership || r.membership;
        total.band_hits += r.band_hits;
        start = k + 1;
    }
    return total;
}

/// Exact positive semidefiniteness: no eigenvalue below zero.
inline bool is_positive_semidefinite(const SymTridiag<Rational>& t) {
    return count_below_splitting(t, Rational(0)).count == 0;
}

template <ScalarType S>
double norm_inf_double(const SymTridiag<S>& t) {
    double best = 0.0;
    for (int i = 0; i < t.dim(); ++i) {
        double row = std::fabs(t.d[static_cast<size_t>(i)].to_double());
        if (i > 0) row += std::fabs(t.e[static_cast<size_t>(i) - 1].to_double());
        if (i + 1 < t.dim()) row += std::fabs(t.e[static_cast<size_t>(i)].to_double());
        best = std::max(best, row);
    }
    return best;
}

/// E_{(-inf,lambda)} or E_{(-inf,lambda]} as an integer range. Exact mode is a
/// point range. Float mode cannot decide membership, so it evaluates the open
/// count at lambda -+ eps (eps = 1e-9 * scale) and widens when they disagree.
struct CountRange {
    long lo = 0, hi = 0;
    bool uncertain = false;
    long band_hits = 0;
    bool certain() const { return !uncertain && lo == hi; }
};

inline CountRange count_below(const SymTridiag<Rational>& t, const Rational& lambda,
                              bool include_lambda, int band_exp = -40) {
    SturmResult r = sturm_count_below(t, lambda, band_exp);
    long c = r.count + ((include_lambda && r.membership) ? 1 : 0);
    return CountRange{c, c, false, 0};
}

inline CountRange count_below(const SymTridiag<ScaledFloat>& t, const ScaledFloat& lambda,
                              bool /*include_lambda*/, int band_exp = -40) {
    double scale = std::max(norm_inf_double(t), std::fabs(lambda.to_double()));
    if (scale == 0.0 || !std::isfinite(scale)) scale = 1.0;
    ScaledFloat eps = ScaledFloat::from_double(1e-9 * scale);
    SturmResult below = sturm_count_below(t, lambda - eps, band_exp);
    SturmResult above = sturm_count_below(t, lambda + eps, band_exp);
    CountRange r;
    r.lo = below.count;
    r.hi = above.count;
    r.band_hits = below.band_hits + above.band_hits;
    r.uncertain = (r.lo != r.hi) || r.band_hits > 0;
    return r;
}

template <ScalarType S>
CountRange count_below(const JacobiMatrixView<S>& j, const S& lambda, bool include_lambda,
                       int band_exp = -40) {
    return count_below(tridiag_of(j), lambda, include_lambda, band_exp);
}

/// Eigenvalue count in the window between lambda0 and lambda1 with per-endpoint
/// open/closed bounds, composed from two below-counts on the same matrix.
template <ScalarType S>
CountRange count_window(const JacobiMatrixView<S>& j, const S& lambda0, const S& lambda1,
                        bool left_open, bool right_open, int band_exp = -40) {
    SymTridiag<S> t = tridiag_of(j);
    CountRange at1 = count_below(t, lambda1, /*include=*/!right_open, band_exp);
    CountRange at0 = count_below(t, lambda0, /*include=*/left_open, band_exp);
    CountRange r;
    r.lo = at1.lo - at0.hi;
    r.hi = at1.hi - at0.lo;
    r.band_hits = at1.band_hits + at0.band_hits;
    r.uncertain = at1.uncertain || at0.uncertain || r.lo != r.hi;
    return r;
}

/// Rational Gershgorin disc bounds enclosing the spectrum.
template <ScalarType S>
std::pair<S, S> gershgorin_bounds(const JacobiMatrixView<S>& j) {
    SymTridiag<S> t = tridiag_of(j);
    S lo = t.d[0], hi = t.d[0];
    for (int i = 0; i < t.dim(); ++i) {
        S radius(0);
        if (i > 0) radius += t.e[static_cast<size_t>(i) - 1].abs();
        if (i + 1 < t.dim()) radius += t.e[static_cast<size_t>(i)].abs();
        S l = t.d[static_cast<size_t>(i)] - radius;
        S h = t.d[static_cast<size_t>(i)] + radius;
        if (l < lo) lo = l;
        if (h > hi) hi = h;
    }
    return {lo, hi};
}

/// Full spectrum of a Jacobi matrix, floating point.
struct Spectrum {
    std::vector<double> eigenvalues; // ascending
    double min_gap = std::numeric_limits<double>::infinity();
};

/// Implicit-shift QL sweeps (Givens rotations, no eigenvectors). Throws
/// NoConvergenceError when an eigenvalue fails to settle within the sweep cap.
Spectrum eig_all_tridiag(std::vector<double> diag, std::vector<double> off);

template <ScalarType S>
Spectrum eig_all(const JacobiMatrixView<S>& j) {
    std::vector<double> d, e;
    d.reserve(j.diag.size());
    e.reserve(j.off.size());
    for (const auto& v : j.diag) d.push_back(v.to_double());
    for (const auto& v : j.off) e.push_back(v.to_double());
    return eig_all_tridiag(std::move(d), std::move(e));
}

} // namespace relosc
