#pragma once

#include "relosc/spectral.hpp"
#include "relosc/wronskian.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace relosc {

/// The four identities of the relative oscillation theorem. Vk pairs a
/// spectral window E_{(-inf,lambda1)w1} - E_{(-inf,lambda0)w0} with an
/// interval convention per orientation:
///   V1: open/closed   <-> (0,N]           for (+,-) and (-,+)
///   V2: open/open     <-> [0,N] for (+,-), (0,N) for (-,+)
///   V3: closed/closed <-> (0,N) for (+,-), [0,N] for (-,+)
///   V4: closed/open   <-> [0,N)           for (+,-) and (-,+)
enum class MainVariant : std::uint8_t { v1, v2, v3, v4 };

/// Boundary solutions used for (u_0, u_1): (+,-) is (u_{0,+}(l0), u_{1,-}(l1)).
enum class Orientation : std::uint8_t { plus_minus, minus_plus };

constexpr std::array<MainVariant, 4> all_variants{MainVariant::v1, MainVariant::v2,
                                                  MainVariant::v3, MainVariant::v4};
constexpr std::array<Orientation, 2> all_orientations{Orientation::plus_minus,
                                                      Orientation::minus_plus};

inline IntervalConvention convention_for(MainVariant v, Orientation o) {
    switch (v) {
        case MainVariant::v1: return IntervalConvention::left_open;
        case MainVariant::v2:
            return o == Orientation::plus_minus ? IntervalConvention::closed
                                                : IntervalConvention::open;
        case MainVariant::v3:
            return o == Orientation::plus_minus ? IntervalConvention::open
                                                : IntervalConvention::closed;
        default: return IntervalConvention::right_open;
    }
}

/// Window bounds of the variant's spectral side, as (left_open, right_open)
/// flags of the interval between lambda0 and lambda1.
inline std::pair<bool, bool> window_for(MainVariant v) {
    switch (v) {
        case MainVariant::v1: return {true, true};   // E) - E]
        case MainVariant::v2: return {false, true};  // E) - E)
        case MainVariant::v3: return {true, false};  // E] - E]
        default: return {false, false};              // E] - E)
    }
}

inline std::string variant_label(MainVariant v, Orientation o) {
    std::string s = "V";
    s += static_cast<char>('1' + static_cast<int>(v));
    s += o == Orientation::plus_minus ? " (+,-)" : " (-,+)";
    return s;
}

/// Dirichlet solution pair of one orientation at (lambda0, lambda1).
template <ScalarType S>
std::pair<SolutionPath<S>, SolutionPath<S>> oriented_solutions(const CoeffPtr<S>& c0,
                                                               const CoeffPtr<S>& c1,
                                                               const S& lambda0, const S& lambda1,
                                                               Orientation o) {
    if (o == Orientation::plus_minus)
        return {solve_plus(c0, lambda0), solve_minus(c1, lambda1)};
    return {solve_minus(c0, lambda0), solve_plus(c1, lambda1)};
}

/// Wronskian-side count of one theorem instance evaluated on given solutions.
template <ScalarType S>
long relative_count_paths(const Coefficients<S>& c0, const Coefficients<S>& c1,
                          const SolutionPath<S>& u0, const SolutionPath<S>& u1,
                          MainVariant v, Orientation o) {
    auto w = wronskian_path(c0, c1, u0, u1);
    return interval_count(w, 0, c0.N(), convention_for(v, o));
}

/// Wronskian-side count of one theorem instance; builds the boundary
/// solutions itself.
template <ScalarType S>
long relative_count(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1, const S& lambda0,
                    const S& lambda1, MainVariant v, Orientation o) {
    auto [u0, u1] = oriented_solutions(c0, c1, lambda0, lambda1, o);
    return relative_count_paths(*c0, *c1, u0, u1, v, o);
}

/// Both sides of one theorem identity plus diagnostics.
struct CountReport {
    MainVariant variant = MainVariant::v1;
    Orientation orientation = Orientation::plus_minus;
    std::string label;
    long wronskian_count = 0;
    long spectral_lo = 0;
    long spectral_hi = 0;
    bool agree = false;      // both sides pinned and equal
    bool compatible = false; // wronskian count inside the spectral range
    bool uncertain = false;  // any float-mode sign degradation on the way
    Mode mode = Mode::exact;
    std::vector<int> w_signs;
    std::vector<int> marks;
    std::vector<long long> delta_ceils; // empty when angle diagnostics were skipped
};

/// Evaluates all 8 identity instances (4 variants x 2 orientations) of the
/// theorem for the operator pair at (lambda0, lambda1). In exact mode every
/// report must come back agree = true; disagreements are reported, not thrown.
template <ScalarType S>
std::vector<CountReport> verify_main(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1,
                                     const S& lambda0, const S& lambda1,
                                     bool with_delta_diagnostics = true) {
    if (c0->N() != c1->N()) throw std::invalid_argument("verify_main: operators must share N");
    const int n_total = c0->N();
    SymTridiag<S> j0 = tridiag_of(matrix_of(*c0));
    SymTridiag<S> j1 = tridiag_of(matrix_of(*c1));
    CountRange e0_open = count_below(j0, lambda0, false, c0->zero_band_exp);
    CountRange e0_closed = count_below(j0, lambda0, true, c0->zero_band_exp);
    CountRange e1_open = count_below(j1, lambda1, false, c1->zero_band_exp);
    CountRange e1_closed = count_below(j1, lambda1, true, c1->zero_band_exp);

    std::vector<CountReport> out;
    out.reserve(8);
    for (Orientation o : all_orientations) {
        auto [u0, u1] = oriented_solutions(c0, c1, lambda0, lambda1, o);
        auto w = wronskian_path(*c0, *c1, u0, u1);

        std::vector<long long> delta_ceils;
        bool delta_uncertain = false;
        if (with_delta_diagnostics) {
            try {
                auto c1s = shift_b(*c1, lambda1 - lambda0);
                auto u1s = reinterpret_shifted(u1, c1s, lambda0);
                auto p0 = pruefer_of(*c0, u0);
                auto p1 = pruefer_of(*c1s, u1s);
                std::vector<int> ws(w.w_sign.begin(), w.w_sign.end());
                auto d = delta_of(p0, p1, ws);
                delta_ceils.reserve(d.sites.size());
                for (const auto& s : d.sites) delta_ceils.push_back(s.ceil_pi);
            } catch (const SignUncertainError&) {
                delta_uncertain = true;
            } catch (const InconsistentSignsError&) {
                delta_uncertain = true;
            }
        }

        for (MainVariant v : all_variants) {
            CountReport r;
            r.variant = v;
            r.orientation = o;
            r.label = variant_label(v, o);
            r.mode = mode_of<S>();
            r.wronskian_count = interval_count(w, 0, n_total, convention_for(v, o));
            auto [left_open, right_open] = window_for(v);
            const CountRange& top = right_open ? e1_open : e1_closed;
            const CountRange& bottom = left_open ? e0_closed : e0_open;
            r.spectral_lo = top.lo - bottom.hi;
            r.spectral_hi = top.hi - bottom.lo;
            r.uncertain = w.sign_uncertain || top.uncertain || bottom.uncertain || delta_uncertain;
            r.compatible = r.spectral_lo <= r.wronskian_count && r.wronskian_count <= r.spectral_hi;
            r.agree = (r.spectral_lo == r.spectral_hi) && (r.wronskian_count == r.spectral_lo);
            r.w_signs.assign(w.w_sign.begin(), w.w_sign.end());
            r.marks.assign(w.marks.begin(), w.marks.end());
            r.delta_ceils = delta_ceils;
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Variant whose spectral window is the interval with the given bound types.
inline MainVariant variant_for_bounds(bool left_open, bool right_open) {
    if (left_open && right_open) return MainVariant::v1;
    if (!left_open && right_open) return MainVariant::v2;
    if (left_open && !right_open) return MainVariant::v3;
    return MainVariant::v4;
}

/// Eigenvalue count of a single operator in the requested interval, computed
/// purely by Wronskian node counting (the theorem specialized to J0 = J1).
template <ScalarType S>
long count_in_interval(const CoeffPtr<S>& c, const S& lambda0, const S& lambda1, bool left_open,
                       bool right_open) {
    if (!(lambda0 < lambda1)) throw std::invalid_argument("count_in_interval: need lambda0 < lambda1");
    return relative_count(c, c, lambda0, lambda1, variant_for_bounds(left_open, right_open),
                          Orientation::plus_minus);
}

/// Triangle inequality for Wronskians on explicit solutions at a common z:
/// |#(u0,u2) - (#(u0,u1) + #(u1,u2))| <= 1 over [0,N] or (0,N].
template <ScalarType S>
bool triangle_check_paths(const Coefficients<S>& c0, const Coefficients<S>& c1,
                          const Coefficients<S>& c2, const SolutionPath<S>& u0,
                          const SolutionPath<S>& u1, const SolutionPath<S>& u2,
                          IntervalConvention conv) {
    if (conv != IntervalConvention::closed && conv != IntervalConvention::left_open)
        throw std::invalid_argument("triangle_check: convention must be [m,n] or (m,n]");
    const int n = c0.N();
    long c02 = interval_count(wronskian_path(c0, c2, u0, u2), 0, n, conv);
    long c01 = interval_count(wronskian_path(c0, c1, u0, u1), 0, n, conv);
    long c12 = interval_count(wronskian_path(c1, c2, u1, u2), 0, n, conv);
    long gap = c02 - (c01 + c12);
    return gap >= -1 && gap <= 1;
}

template <ScalarType S>
bool triangle_check(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1, const CoeffPtr<S>& c2,
                    const S& lambda, IntervalConvention conv) {
    auto u0 = solve_minus(c0, lambda);
    auto u1 = solve_minus(c1, lambda);
    auto u2 = solve_minus(c2, lambda);
    return triangle_check_paths(*c0, *c1, *c2, u0, u1, u2, conv);
}

/// |#_{[m,n]}(u0,u1) - (#_{(m,n)}(u1) - #_{(m,n)}(u0))| <= 1, also with the
/// (m,n] and [m,n) conventions on the left. Solutions share z.
template <ScalarType S>
bool nodes_vs_wronskian_check(const Coefficients<S>& c0, const Coefficients<S>& c1,
                              const SolutionPath<S>& u0, const SolutionPath<S>& u1, int m, int n,
                              IntervalConvention conv) {
    if (conv == IntervalConvention::open)
        throw std::invalid_argument("nodes_vs_wronskian_check: (m,n) convention is not part of the bound");
    long w = interval_count(wronskian_path(c0, c1, u0, u1), m, n, conv);
    long nodes = count_nodes(u1, m, n) - count_nodes(u0, m, n);
    long gap = w - nodes;
    return gap >= -1 && gap <= 1;
}

/// Certifies J1 >= J2 (PSD order). Constructive route: equal interior a and
/// pointwise b dominance. Fallback: exact PSD check of the tridiagonal
/// difference (ScaledFloat entries are dyadic, so the conversion is exact).
template <ScalarType S>
bool certify_operator_order(const Coefficients<S>& c1, const Coefficients<S>& c2) {
    if (c1.N() != c2.N()) return false;
    bool constructive = true;
    for (int k = 1; k <= c1.N() - 2 && constructive; ++k)
        if (!(c1.a(k) == c2.a(k))) constructive = false;
    for (int k = 1; k <= c1.N() - 1 && constructive; ++k)
        if (c1.b(k) < c2.b(k)) constructive = false;
    if (constructive) return true;

    SymTridiag<Rational> diff;
    for (int k = 1; k <= c1.N() - 1; ++k) {
        if constexpr (mode_of<S>() == Mode::exact)
            diff.d.push_back(c1.b(k) - c2.b(k));
        else
            diff.d.push_back(to_rational(c1.b(k)) - to_rational(c2.b(k)));
    }
    for (int k = 1; k <= c1.N() - 2; ++k) {
        if constexpr (mode_of<S>() == Mode::exact)
            diff.e.push_back(c1.a(k) - c2.a(k));
        else
            diff.e.push_back(to_rational(c1.a(k)) - to_rational(c2.a(k)));
    }
    return is_positive_semidefinite(diff);
}

/// Comparison theorem I: J1 >= J2 implies
/// #(u_{0,+-}(l), u_{2,-+}(l)) >= #(u_{0,+-}(l), u_{1,-+}(l)) in every
/// convention. Throws PreconditionUnverifiedError without a certificate.
template <ScalarType S>
bool comparison_I_check(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1, const CoeffPtr<S>& c2,
                        const S& lambda, IntervalConvention conv) {
    if (!certify_operator_order(*c1, *c2))
        throw PreconditionUnverifiedError("comparison_I_check: J1 >= J2 not certified");
    const int n = c0->N();
    for (Orientation o : all_orientations) {
        SolutionPath<S> u0 = o == Orientation::plus_minus ? solve_plus(c0, lambda)
                                                          : solve_minus(c0, lambda);
        SolutionPath<S> u1 = o == Orientation::plus_minus ? solve_minus(c1, lambda)
                                                          : solve_plus(c1, lambda);
        SolutionPath<S> u2 = o == Orientation::plus_minus ? solve_minus(c2, lambda)
                                                          : solve_plus(c2, lambda);
        long with_c2 = interval_count(wronskian_path(*c0, *c2, u0, u2), 0, n, conv);
        long with_c1 = interval_count(wronskian_path(*c0, *c1, u0, u1), 0, n, conv);
        if (with_c2 < with_c1) return false;
    }
    return true;
}

enum class CheckOutcome : std::uint8_t { holds, vacuous, violated, not_certified };

inline const char* outcome_name(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::holds: return "holds";
        case CheckOutcome::vacuous: return "vacuous";
        case CheckOutcome::violated: return "violated";
        default: return "not-certified";
    }
}

namespace detail {

/// Condition A of comparison theorem II on concrete data:
/// W_j(u0,u1) u0(j+1) u1(j+1) <= 0 and W_j(u1,u2) u1(j+1) u2(j+1) <= 0
/// for j = 0..N-2.
template <ScalarType S>
bool condition_a(const WronskianPath<S>& w01, const WronskianPath<S>& w12) {
    for (int j = 0; j <= w01.N() - 2; ++j) {
        if (w01.w_sign[static_cast<size_t>(j)] * w01.uprod_sign[static_cast<size_t>(j)] > 0)
            return false;
        if (w12.w_sign[static_cast<size_t>(j)] * w12.uprod_sign[static_cast<size_t>(j)] > 0)
            return false;
    }
    return true;
}

/// Condition B: equal a sequences and b_0 >= b_1 >= b_2 on matrix sites.
template <ScalarType S>
bool condition_b(const Coefficients<S>& c0, const Coefficients<S>& c1, const Coefficients<S>& c2) {
    for (int k = 0; k <= c0.N(); ++k)
        if (!(c0.a(k) == c1.a(k)) || !(c1.a(k) == c2.a(k))) return false;
    for (int k = 1; k <= c0.N() - 1; ++k)
        if (c0.b(k) < c1.b(k) || c1.b(k) < c2.b(k)) return false;
    return true;
}

} // namespace detail

/// Comparison theorem II on explicit solutions at a common z: under condition
/// A (checked on the data) or condition B (checked on the coefficients), if 0
/// and N-2 are positive nodes of W(u0,u1) then W(u0,u2) has a positive node
/// in 0..N-2. The antecedent names two distinct node sites, so N >= 3 is
/// required and N = 2 reports vacuous (the degenerate reading with one site
/// is false). A failed antecedent reports vacuous, never a pass.
template <ScalarType S>
CheckOutcome comparison_II_check_paths(const Coefficients<S>& c0, const Coefficients<S>& c1,
                                       const Coefficients<S>& c2, const SolutionPath<S>& u0,
                                       const SolutionPath<S>& u1, const SolutionPath<S>& u2) {
    const int n = c0.N();
    auto w01 = wronskian_path(c0, c1, u0, u1);
    if (!detail::condition_b(c0, c1, c2)) {
        auto w12 = wronskian_path(c1, c2, u1, u2);
        if (!detail::condition_a(w01, w12)) return CheckOutcome::not_certified;
    }
    if (n < 3) return CheckOutcome::vacuous;
    bool antecedent = weighted_node_mark(w01, 0) == 1 && weighted_node_mark(w01, n - 2) == 1;
    if (!antecedent) return CheckOutcome::vacuous;
    auto w02 = wronskian_path(c0, c2, u0, u2);
    for (int j = 0; j <= n - 2; ++j)
        if (weighted_node_mark(w02, j) == 1) return CheckOutcome::holds;
    return CheckOutcome::violated;
}

/// Comparison theorem II over both Dirichlet orientation patterns.
template <ScalarType S>
CheckOutcome comparison_II_check(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1,
                                 const CoeffPtr<S>& c2, const S& lambda) {
    bool any_certified = false, any_nonvacuous = false;
    for (Orientation o : all_orientations) {
        SolutionPath<S> u0 = o == Orientation::plus_minus ? solve_plus(c0, lambda)
                                                          : solve_minus(c0, lambda);
        SolutionPath<S> u1 = o == Orientation::plus_minus ? solve_minus(c1, lambda)
                                                          : solve_plus(c1, lambda);
        SolutionPath<S> u2 = o == Orientation::plus_minus ? solve_minus(c2, lambda)
                                                          : solve_plus(c2, lambda);
        CheckOutcome out = comparison_II_check_paths(*c0, *c1, *c2, u0, u1, u2);
        if (out == CheckOutcome::violated) return out;
        if (out != CheckOutcome::not_certified) any_certified = true;
        if (out == CheckOutcome::holds) any_nonvacuous = true;
    }
    if (!any_certified) return CheckOutcome::not_certified;
    return any_nonvacuous ? CheckOutcome::holds : CheckOutcome::vacuous;
}

/// Corollary (two positive nodes) on Dirichlet pairs under condition B. A
/// weighted node needs u0(n+1) u1(n+1) != 0, so site N-1 can never carry one
/// when a solution vanishes at N; the last antecedent site a Dirichlet pair
/// can realize is N-2, and with positive nodes at 0 and N-2 the spectral
/// identities force at least two positive nodes of W(u0,u2) in 0..N-1.
/// Needs N >= 3 for the two antecedent sites to be distinct.
template <ScalarType S>
CheckOutcome corollary_two_nodes_check(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1,
                                       const CoeffPtr<S>& c2, const S& lambda) {
    if (!detail::condition_b(*c0, *c1, *c2)) return CheckOutcome::not_certified;
    const int n = c0->N();
    if (n < 3) return CheckOutcome::vacuous;
    bool any_nonvacuous = false;
    for (Orientation o : all_orientations) {
        SolutionPath<S> u0 = o == Orientation::plus_minus ? solve_plus(c0, lambda)
                                                          : solve_minus(c0, lambda);
        SolutionPath<S> u1 = o == Orientation::plus_minus ? solve_minus(c1, lambda)
                                                          : solve_plus(c1, lambda);
        SolutionPath<S> u2 = o == Orientation::plus_minus ? solve_minus(c2, lambda)
                                                          : solve_plus(c2, lambda);
        auto w01 = wronskian_path(*c0, *c1, u0, u1);
        bool antecedent = weighted_node_mark(w01, 0) == 1 && weighted_node_mark(w01, n - 2) == 1;
        if (!antecedent) continue;
        any_nonvacuous = true;
        auto w02 = wronskian_path(*c0, *c2, u0, u2);
        int positives = 0;
        for (int j = 0; j <= n - 1; ++j)
            if (weighted_node_mark(w02, j) == 1) ++positives;
        if (positives < 2) return CheckOutcome::violated;
    }
    return any_nonvacuous ? CheckOutcome::holds : CheckOutcome::vacuous;
}

/// The concatenation identities of the theorem's remark at a common lambda:
///   #_{[0,N]}(u_{0,+},u_{3,-}) = #_{[0,N)}(u_{0,+},u_{1,-})
///                              + #_{[0,N]}(u_{1,-},u_{2,+})
///                              + #_{(0,N]}(u_{2,+},u_{3,-}),
/// its mirrored (-,+) version, and the swap identity
/// #_{[0,N]}(u_{0,+-},u_{1,-+}) = -#_{[0,N]}(u_{1,+-},u_{0,-+}).
template <ScalarType S>
bool concatenation_check(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1, const CoeffPtr<S>& c2,
                         const CoeffPtr<S>& c3, const S& lambda) {
    const int n = c0->N();
    auto u0p = solve_plus(c0, lambda);
    auto u0m = solve_minus(c0, lambda);
    auto u1p = solve_plus(c1, lambda);
    auto u1m = solve_minus(c1, lambda);
    auto u2p = solve_plus(c2, lambda);
    auto u2m = solve_minus(c2, lambda);
    auto u3p = solve_plus(c3, lambda);
    auto u3m = solve_minus(c3, lambda);

    auto cnt = [&](const Coefficients<S>& ca, const Coefficients<S>& cb, const SolutionPath<S>& ua,
                   const SolutionPath<S>& ub, IntervalConvention conv) {
        return interval_count(wronskian_path(ca, cb, ua, ub), 0, n, conv);
    };
    using IC = IntervalConvention;

    long lhs1 = cnt(*c0, *c3, u0p, u3m, IC::closed);
    long rhs1 = cnt(*c0, *c1, u0p, u1m, IC::right_open) + cnt(*c1, *c2, u1m, u2p, IC::closed) +
                cnt(*c2, *c3, u2p, u3m, IC::left_open);
    if (lhs1 != rhs1) return false;

    long lhs2 = cnt(*c0, *c3, u0m, u3p, IC::closed);
    long rhs2 = cnt(*c0, *c1, u0m, u1p, IC::left_open) + cnt(*c1, *c2, u1p, u2m, IC::closed) +
                cnt(*c2, *c3, u2m, u3p, IC::right_open);
    if (lhs2 != rhs2) return false;

    if (cnt(*c0, *c1, u0p, u1m, IC::closed) != -cnt(*c1, *c0, u1p, u0m, IC::closed)) return false;
    if (cnt(*c0, *c1, u0m, u1p, IC::closed) != -cnt(*c1, *c0, u1m, u0p, IC::closed)) return false;
    return true;
}

/// All 8 Wronskian-side counts of the theorem for one pair.
template <ScalarType S>
std::array<long, 8> wronskian_counts(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1,
                                     const S& lambda0, const S& lambda1) {
    std::array<long, 8> out{};
    size_t i = 0;
    for (Orientation o : all_orientations) {
        auto [u0, u1] = oriented_solutions(c0, c1, lambda0, lambda1, o);
        auto w = wronskian_path(*c0, *c1, u0, u1);
        for (MainVariant v : all_variants)
            out[i++] = interval_count(w, 0, c0->N(), convention_for(v, o));
    }
    return out;
}

/// Re-runs the 8 counts under `draws` distinct strictly-negative choices of
/// each operator's extension slots (and arbitrary b(N)); counts must never
/// move. The spectral side cannot see the slots, so this isolates the
/// Wronskian machinery.
template <ScalarType S>
bool extension_invariance_check(const CoeffPtr<S>& c0, const CoeffPtr<S>& c1, const S& lambda0,
                                const S& lambda1, Rng& rng, int draws = 8) {
    auto baseline = wronskian_counts(c0, c1, lambda0, lambda1);
    std::set<std::string> seen;
    int done = 0;
    int guard = 0;
    while (done < draws && ++guard < 100 * draws) {
        auto draw_neg = [&] { return rng.rational_in(Rational(-8), Rational(-1, 8), 8); };
        auto draw_any = [&] { return rng.rational_in(Rational(-8), Rational(8), 8); };
        Rational vals[8] = {draw_neg(), draw_neg(), draw_neg(), draw_any(),
                            draw_neg(), draw_neg(), draw_neg(), draw_any()};
        std::string key;
        for (const auto& v : vals) key += v.to_string() + "|";
        if (!seen.insert(key).second) continue;
        ++done;
        auto c0x = with_extensions(*c0, scalar_from_rational<S>(vals[0]),
                                   scalar_from_rational<S>(vals[1]),
                                   scalar_from_rational<S>(vals[2]),
                                   scalar_from_rational<S>(vals[3]));
        auto c1x = with_extensions(*c1, scalar_from_rational<S>(vals[4]),
                                   scalar_from_rational<S>(vals[5]),
                                   scalar_from_rational<S>(vals[6]),
                                   scalar_from_rational<S>(vals[7]));
        if (wronskian_counts(c0x, c1x, lambda0, lambda1) != baseline) return false;
    }
    return done >= draws;
}

} // namespace relosc
