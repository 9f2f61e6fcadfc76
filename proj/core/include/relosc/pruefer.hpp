#pragma once

#include "relosc/recurrence.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace relosc {

/// Residual class of gamma = theta - (ceil(theta/pi) - 1)pi, gamma in (0, pi].
/// Point classes pin the residual exactly; open classes pin its quadrant.
enum class GammaClass : std::uint8_t {
    acute,    // gamma in (0, pi/2):  u(n) != 0, u(n+1) != 0, same sign
    right,    // gamma = pi/2:        u(n+1) = 0
    obtuse,   // gamma in (pi/2, pi): u(n) != 0, u(n+1) != 0, opposite signs
    straight, // gamma = pi:          u(n) = 0
};

/// Normalized Pruefer angle, stored exactly: theta = (ceil_pi - 1)pi + gamma.
/// All ceiling/floor queries are integer reads; `approx` is diagnostic only.
struct PrueferAngle {
    std::int64_t ceil_pi = 0;
    GammaClass gamma = GammaClass::straight;
    double approx = 0.0;

    std::int64_t floor_pi() const {
        return gamma == GammaClass::straight ? ceil_pi : ceil_pi - 1;
    }
};

struct PrueferPath {
    std::vector<PrueferAngle> angles;  // sites 0..N
    std::vector<std::int8_t> u_signs;  // signs of u(0..N+1), the generating data
    BcTag bc = BcTag::custom;

    int N() const { return static_cast<int>(angles.size()) - 1; }
    const PrueferAngle& at(int n) const { return angles[static_cast<size_t>(n)]; }
};

inline std::int64_t ceil_pi(const PrueferPath& p, int n) { return p.at(n).ceil_pi; }
inline std::int64_t floor_pi(const PrueferPath& p, int n) { return p.at(n).floor_pi(); }

/// Node count between m and n read off the angles:
/// ceil(theta(n)/pi) - floor(theta(m)/pi) - 1.
inline long count_nodes_pruefer(const PrueferPath& p, int m, int n) {
    return static_cast<long>(p.at(n).ceil_pi - p.at(m).floor_pi() - 1);
}

namespace detail {

/// Class and mantissa parity of the angle at a site, from the exact signs of
/// u(n) and u(n+1). parity = +1 means ceil_pi is odd ((-1)^(ceil-1) = +1).
/// Uses -a(n) > 0, so sign(-a(n) u(n+1)) = sign(u(n+1)).
inline void classify_site(int s_un, int s_un1, GammaClass& cls, int& parity) {
    if (s_un == 0) {
        cls = GammaClass::straight;
        parity = -s_un1;
    } else if (s_un1 == 0) {
        cls = GammaClass::right;
        parity = s_un;
    } else if (s_un == s_un1) {
        cls = GammaClass::acute;
        parity = s_un;
    } else {
        cls = GammaClass::obtuse;
        parity = s_un;
    }
}

inline int gamma_rank(GammaClass g) { return static_cast<int>(g); }

} // namespace detail

/// Builds the normalized angle path of a solution. The base point (0 for
/// minus/custom, N for plus) gets theta in (-pi, pi]; from there the ceiling
/// increments exactly at nodes. Residual classes come from exact sign data;
/// the class/ceiling parity link is re-checked at every site and a mismatch
/// means float-mode sign corruption.
template <ScalarType S>
PrueferPath pruefer_of(const Coefficients<S>& c, const SolutionPath<S>& u) {
    const int n_total = u.N();
    PrueferPath path;
    path.bc = u.bc;
    path.angles.resize(static_cast<size_t>(n_total) + 1);
    path.u_signs.resize(static_cast<size_t>(n_total) + 2);
    for (int n = 0; n <= n_total + 1; ++n)
        path.u_signs[static_cast<size_t>(n)] = static_cast<std::int8_t>(sign_of(u.at(n)));

    std::vector<GammaClass> cls(static_cast<size_t>(n_total) + 1);
    std::vector<int> parity(static_cast<size_t>(n_total) + 1);
    std::vector<bool> node(static_cast<size_t>(n_total) + 1);
    for (int n = 0; n <= n_total; ++n) {
        detail::classify_site(path.u_signs[static_cast<size_t>(n)],
                              path.u_signs[static_cast<size_t>(n) + 1],
                              cls[static_cast<size_t>(n)], parity[static_cast<size_t>(n)]);
        node[static_cast<size_t>(n)] = is_node(c, u, n);
    }

    const int anchor = (u.bc == BcTag::plus) ? n_total : 0;
    std::vector<std::int64_t> ceil(static_cast<size_t>(n_total) + 1);
    // theta(anchor) in (-pi, pi] pins the ceiling to 0 or 1 by parity.
    ceil[static_cast<size_t>(anchor)] = parity[static_cast<size_t>(anchor)] > 0 ? 1 : 0;
    for (int n = anchor + 1; n <= n_total; ++n)
        ceil[static_cast<size_t>(n)] =
            ceil[static_cast<size_t>(n) - 1] + (node[static_cast<size_t>(n) - 1] ? 1 : 0);
    for (int n = anchor - 1; n >= 0; --n)
        ceil[static_cast<size_t>(n)] =
            ceil[static_cast<size_t>(n) + 1] - (node[static_cast<size_t>(n)] ? 1 : 0);

    for (int n = 0; n <= n_total; ++n) {
        int expect = (ceil[static_cast<size_t>(n)] % 2 != 0) ? 1 : -1; // +1 iff ceil odd
        if (expect != parity[static_cast<size_t>(n)]) {
            if constexpr (mode_of<S>() == Mode::exact)
                throw std::logic_error("pruefer_of: parity invariant violated");
            else
                throw SignUncertainError("pruefer_of: angle parity contradicts sign data");
        }
        double du = 0.0, dv = 0.0;
        S v = (S(0) - c.a(n)) * u.at(n + 1);
        to_scaled_double_pair(u.at(n), v, du, dv);
        int p = parity[static_cast<size_t>(n)];
        double gamma = std::atan2(p * du, p * dv);
        if (gamma <= 0.0) gamma = path.u_signs[static_cast<size_t>(n)] == 0 ? M_PI : gamma;
        path.angles[static_cast<size_t>(n)] = PrueferAngle{
            ceil[static_cast<size_t>(n)], cls[static_cast<size_t>(n)],
            (static_cast<double>(ceil[static_cast<size_t>(n)]) - 1.0) * M_PI + gamma};
    }
    return path;
}

/// Exact form of Delta(n) = theta_1(n) - theta_0(n) at one site.
struct DeltaSite {
    std::int64_t ceil_pi = 0;
    bool is_multiple = false; // Delta in pi*Z, equivalently W_n = 0
    double approx = 0.0;

    std::int64_t floor_pi() const { return is_multiple ? ceil_pi : ceil_pi - 1; }
};

struct DeltaPath {
    std::vector<DeltaSite> sites; // 0..N
    int N() const { return static_cast<int>(sites.size()) - 1; }
    const DeltaSite& at(int n) const { return sites[static_cast<size_t>(n)]; }
};

/// Combines two angle paths into the exact Delta path. With theta_j =
/// (c_j - 1)pi + gamma_j and K = c_1 - c_0, the residual difference
/// gamma_1 - gamma_0 lies in (-pi, pi) and its sign is (-1)^K sign(W_n),
/// so ceil(Delta/pi) = K + [gamma_1 > gamma_0]. The supplied Wronskian signs
/// are cross-checked against the class order; a contradiction throws.
inline DeltaPath delta_of(const PrueferPath& p0, const PrueferPath& p1,
                          std::span<const int> wronskian_signs) {
    if (p0.N() != p1.N() || static_cast<int>(wronskian_signs.size()) != p0.N() + 1)
        throw std::invalid_argument("delta_of: index ranges differ");
    DeltaPath d;
    d.sites.resize(static_cast<size_t>(p0.N()) + 1);
    for (int n = 0; n <= p0.N(); ++n) {
        const auto& a0 = p0.at(n);
        const auto& a1 = p1.at(n);
        std::int64_t k = a1.ceil_pi - a0.ceil_pi;
        int sw = wronskian_signs[static_cast<size_t>(n)];
        int rel = (sw == 0) ? 0 : ((k % 2 == 0) ? sw : -sw); // sign(gamma_1 - gamma_0)

        int r0 = detail::gamma_rank(a0.gamma), r1 = detail::gamma_rank(a1.gamma);
        bool point0 = a0.gamma == GammaClass::right || a0.gamma == GammaClass::straight;
        bool point1 = a1.gamma == GammaClass::right || a1.gamma == GammaClass::straight;
        int forced = 2; // 2 = undetermined by classes alone
        if (r0 != r1) forced = r1 > r0 ? 1 : -1;
        else if (point0 && point1) forced = 0;
        if (forced != 2 && forced != rel)
            throw InconsistentSignsError("delta_of: Wronskian sign contradicts residual classes");

        d.sites[static_cast<size_t>(n)] =
            DeltaSite{k + (rel > 0 ? 1 : 0), rel == 0, a1.approx - a0.approx};
    }
    return d;
}

} // namespace relosc
