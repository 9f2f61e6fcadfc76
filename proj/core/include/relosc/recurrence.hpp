#pragma once

#include "relosc/coeffs.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace relosc {

enum class BcTag { minus, plus, custom };

/// Values u(0..N+1) of a solution of tau u = z u.
///
/// Invariants (exact mode, by construction): no two consecutive zeros, and
/// u(n)=0 for 1 <= n <= N implies u(n-1)u(n+1) < 0. In float mode computed
/// values inside the zero band are snapped to exact zero; every such snap is
/// counted in band_hits and raises sign_uncertain.
template <ScalarType S>
struct SolutionPath {
    S z;
    std::vector<S> u; // indices 0..N+1
    BcTag bc = BcTag::custom;
    CoeffPtr<S> coeffs;
    bool sign_uncertain = false;
    long band_hits = 0;

    int N() const { return static_cast<int>(u.size()) - 2; }
    const S& at(int n) const { assert(n >= 0 && n < static_cast<int>(u.size())); return u[static_cast<size_t>(n)]; }
};

/// One forward step of the difference equation at site n:
/// u(n+1) = ((z - b(n)) u(n) - a(n-1) u(n-1)) / a(n).
template <ScalarType S>
S step_forward(const Coefficients<S>& c, const S& z, int n, const S& u_prev, const S& u_cur) {
    if (n < 1 || n > c.N()) throw std::invalid_argument("step_forward: site out of range");
    if (u_prev.is_zero() && u_cur.is_zero())
        throw std::invalid_argument("step_forward: (0,0) initial pair is the trivial solution");
    S t1 = (z - c.b(n)) * u_cur;
    S t2 = c.a(n - 1) * u_prev;
    return (t1 - t2) / c.a(n);
}

namespace detail {

/// Numerator of a propagation step with float-mode zero snapping. Refuses to
/// snap when the neighbour value is already zero: a solution cannot have two
/// consecutive zeros, so such a snap would be pure sign corruption.
template <ScalarType S>
S step_numerator(const S& t1, const S& t2, const S& neighbour, int band_exp,
                 bool& uncertain, long& hits) {
    S num = t1 - t2;
    bool hit = false;
    S snapped = snap_to_zero(num, max_magnitude(t1, t2), band_exp, hit);
    if (hit) {
        uncertain = true;
        ++hits;
        if (neighbour.is_zero()) return num; // keep the residue's sign
        return snapped;
    }
    return num;
}

} // namespace detail

/// s_-(z): u(0) = 0, u(1) = 1, propagated forward to u(N+1).
template <ScalarType S>
SolutionPath<S> solve_minus(CoeffPtr<S> c, S z) {
    SolutionPath<S> p;
    p.z = z;
    p.bc = BcTag::minus;
    p.coeffs = c;
    p.u.resize(static_cast<size_t>(c->N()) + 2);
    p.u[0] = S(0);
    p.u[1] = S(1);
    for (int n = 1; n <= c->N(); ++n) {
        S t1 = (z - c->b(n)) * p.u[static_cast<size_t>(n)];
        S t2 = c->a(n - 1) * p.u[static_cast<size_t>(n) - 1];
        S num = detail::step_numerator(t1, t2, p.u[static_cast<size_t>(n)], c->zero_band_exp,
                                       p.sign_uncertain, p.band_hits);
        p.u[static_cast<size_t>(n) + 1] = num / c->a(n);
    }
    return p;
}

/// s_+(z): u(N) = 0, u(N+1) = 1, propagated backward to u(0) via
/// u(n-1) = ((z - b(n)) u(n) - a(n) u(n+1)) / a(n-1).
template <ScalarType S>
SolutionPath<S> solve_plus(CoeffPtr<S> c, S z) {
    SolutionPath<S> p;
    p.z = z;
    p.bc = BcTag::plus;
    p.coeffs = c;
    p.u.resize(static_cast<size_t>(c->N()) + 2);
    p.u[static_cast<size_t>(c->N())] = S(0);
    p.u[static_cast<size_t>(c->N()) + 1] = S(1);
    for (int n = c->N(); n >= 1; --n) {
        S t1 = (z - c->b(n)) * p.u[static_cast<size_t>(n)];
        S t2 = c->a(n) * p.u[static_cast<size_t>(n) + 1];
        S num = detail::step_numerator(t1, t2, p.u[static_cast<size_t>(n)], c->zero_band_exp,
                                       p.sign_uncertain, p.band_hits);
        p.u[static_cast<size_t>(n) - 1] = num / c->a(n - 1);
    }
    return p;
}

/// Forward solution from arbitrary initial data (u(0), u(1)) != (0, 0).
template <ScalarType S>
SolutionPath<S> solve_custom(CoeffPtr<S> c, S z, S u0, S u1) {
    if (u0.is_zero() && u1.is_zero())
        throw std::invalid_argument("solve_custom: trivial initial data");
    SolutionPath<S> p;
    p.z = z;
    p.bc = BcTag::custom;
    p.coeffs = c;
    p.u.resize(static_cast<size_t>(c->N()) + 2);
    p.u[0] = std::move(u0);
    p.u[1] = std::move(u1);
    for (int n = 1; n <= c->N(); ++n) {
        S t1 = (z - c->b(n)) * p.u[static_cast<size_t>(n)];
        S t2 = c->a(n - 1) * p.u[static_cast<size_t>(n) - 1];
        S num = detail::step_numerator(t1, t2, p.u[static_cast<size_t>(n)], c->zero_band_exp,
                                       p.sign_uncertain, p.band_hits);
        p.u[static_cast<size_t>(n) + 1] = num / c->a(n);
    }
    return p;
}

/// Node test at site n: u(n) = 0 or a(n) u(n) u(n+1) > 0.
template <ScalarType S>
bool is_node(const Coefficients<S>& c, const SolutionPath<S>& u, int n) {
    assert(n >= 0 && n <= u.N());
    int s = sign_of(u.at(n));
    if (s == 0) return true;
    return sign_of(c.a(n)) * s * sign_of(u.at(n + 1)) > 0;
}

template <ScalarType S>
bool is_node(const SolutionPath<S>& u, int n) {
    return is_node(*u.coeffs, u, n);
}

/// Number of nodes of u between m and l: node sites n with m < n < l, plus
/// n = m when u(m) != 0 and m is a node. The right endpoint never counts.
template <ScalarType S>
long count_nodes(const SolutionPath<S>& u, int m, int l) {
    assert(0 <= m && m < l && l <= u.N() + 1);
    long cnt = 0;
    if (m <= u.N() && !u.at(m).is_zero() && is_node(u, m)) ++cnt;
    for (int n = m + 1; n < l && n <= u.N(); ++n)
        if (is_node(u, n)) ++cnt;
    return cnt;
}

/// Same value sequence scaled by c != 0; Dirichlet tags survive scaling.
template <ScalarType S>
SolutionPath<S> scale_path(const SolutionPath<S>& p, const S& c) {
    if (c.is_zero()) throw std::invalid_argument("scale_path: zero scale");
    SolutionPath<S> q = p;
    for (auto& v : q.u) v = v * c;
    return q;
}

/// Coefficients with b(1..N) shifted by -delta, i.e. the operator whose
/// solutions at z - delta coincide with the original solutions at z.
template <ScalarType S>
CoeffPtr<S> shift_b(const Coefficients<S>& c, const S& delta) {
    auto out = std::make_shared<Coefficients<S>>(c);
    for (auto& v : out->b_seq) v = v - delta;
    return out;
}

/// Relabels a path as a solution of `shifted` at new_z = z - delta without
/// touching the values. In exact mode the claim is verified site by site.
template <ScalarType S>
SolutionPath<S> reinterpret_shifted(const SolutionPath<S>& p, CoeffPtr<S> shifted, S new_z) {
    SolutionPath<S> q = p;
    q.coeffs = shifted;
    q.z = std::move(new_z);
    if constexpr (mode_of<S>() == Mode::exact) {
        for (int n = 1; n <= q.N(); ++n) {
            S res = shifted->a(n) * q.at(n + 1) + shifted->a(n - 1) * q.at(n - 1) +
                    (shifted->b(n) - q.z) * q.at(n);
            if (!res.is_zero())
                throw std::invalid_argument("reinterpret_shifted: values do not solve the shifted equation");
        }
    }
    return q;
}

} // namespace relosc
