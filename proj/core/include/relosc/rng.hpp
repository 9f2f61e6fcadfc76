#pragma once

#include "relosc/rational.hpp"

#include <cstdint>
#include <random>

namespace relosc {

/// Deterministic random source. mt19937_64 has a fully specified output
/// sequence and the bounded draw below avoids implementation-defined
/// distributions, so identical seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), g_(seed) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    /// Independent substream keyed by (a, b); used per (property, trial).
    Rng derive(std::uint64_t a, std::uint64_t b = 0) const {
        return Rng(mix(seed_ ^ mix(a ^ mix(b))));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return g_(); }

    /// Uniform in [0, n), rejection-sampled (no modulo bias).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = g_(); } while (v >= limit);
        return v % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Rational in [lo, hi] with denominator <= max_den: draws a denominator,
    /// then a numerator admissible for it. Falls back to the interval midpoint
    /// when no grid point of any tried denominator fits.
    Rational rational_in(const Rational& lo, const Rational& hi, int max_den) {
        if (max_den < 1) max_den = 1;
        for (int attempt = 0; attempt < 2 * max_den; ++attempt) {
            long den = static_cast<long>(range(1, max_den));
            Rational d(den);
            // numerator bounds: ceil(lo*den) .. floor(hi*den)
            mpq_class l = (lo * d).raw(), h = (hi * d).raw();
            mpz_class nlo, nhi;
            mpz_cdiv_q(nlo.get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
            mpz_fdiv_q(nhi.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
            if (nlo > nhi) continue;
            mpz_class width = nhi - nlo;
            if (!width.fits_ulong_p()) continue; // bounds of this artifact stay tiny
            std::uint64_t w = static_cast<std::uint64_t>(width.get_ui());
            std::uint64_t pick = w == UINT64_MAX ? next() : below(w + 1);
            mpz_class num = nlo + mpz_class(static_cast<unsigned long>(pick));
            return Rational(mpq_class(num, mpz_class(den)));
        }
        return (lo + hi) / Rational(2);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 g_;
};

} // namespace relosc
