#include "relosc/spectral.hpp"

#include "relosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace relosc {

// Root-free QL with implicit shifts, the classic tql1 scheme: each sweep
// chases one Givens rotation down the active block until the trailing
// off-diagonal element is negligible.
Spectrum eig_all_tridiag(std::vector<double> d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return Spectrum{{}, std::numeric_limits<double>::infinity()};
    if (static_cast<int>(e.size()) != n - 1)
        throw std::invalid_argument("eig_all_tridiag: off-diagonal size must be dim-1");
    e.push_back(0.0); // sentinel so e[m] is addressable for m = n-1
    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                double dd = std::fabs(d[static_cast<size_t>(m)]) + std::fabs(d[static_cast<size_t>(m) + 1]);
                if (std::fabs(e[static_cast<size_t>(m)]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 80)
                throw NoConvergenceError("eig_all_tridiag: QL sweep cap exceeded at index " +
                                         std::to_string(l));
            double g = (d[static_cast<size_t>(l) + 1] - d[static_cast<size_t>(l)]) /
                       (2.0 * e[static_cast<size_t>(l)]);
            double r = std::hypot(g, 1.0);
            g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
                e[static_cast<size_t>(l)] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool recovered = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[static_cast<size_t>(i)];
                double b = c * e[static_cast<size_t>(i)];
                r = std::hypot(f, g);
                e[static_cast<size_t>(i) + 1] = r;
                if (r == 0.0) { // deflate and retry the block
                    d[static_cast<size_t>(i) + 1] -= p;
                    e[static_cast<size_t>(m)] = 0.0;
                    recovered = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[static_cast<size_t>(i) + 1] - p;
                r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
                p = s * r;
                d[static_cast<size_t>(i) + 1] = g + p;
                g = c * r - b;
            }
            if (recovered) continue;
            d[static_cast<size_t>(l)] -= p;
            e[static_cast<size_t>(l)] = g;
            e[static_cast<size_t>(m)] = 0.0;
        }
    }

    d.shrink_to_fit();
    std::sort(d.begin(), d.end());
    Spectrum spec;
    spec.eigenvalues = std::move(d);
    for (size_t i = 1; i < spec.eigenvalues.size(); ++i)
        spec.min_gap = std::min(spec.min_gap, spec.eigenvalues[i] - spec.eigenvalues[i - 1]);
    return spec;
}

} // namespace relosc
