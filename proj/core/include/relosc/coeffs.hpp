#pragma once

#include "relosc/errors.hpp"
#include "relosc/rng.hpp"
#include "relosc/scalar.hpp"

#include <cassert>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace relosc {

/// Jacobi coefficient sequences a(0..N), b(1..N) with a(n) < 0 everywhere.
///
/// The (N-1)x(N-1) matrix uses only the interior entries a(1..N-2), b(1..N-1);
/// the slots a(0), a(N-1), a(N), b(N) extend the difference equation to the
/// full solution index range 0..N+1 and default to -1, -1, -1, 0. Theorem-level
/// counts must not depend on the extension choice (tested, not assumed).
///
/// Immutable after construction. zero_band_exp is the float-mode sign policy
/// travelling with the instance (ignored in exact mode).
template <ScalarType S>
struct Coefficients {
    int n_right = 0;      // the paper's N
    std::vector<S> a_seq; // a(0..N), size N+1
    std::vector<S> b_seq; // b(1..N), size N
    int zero_band_exp = -40;

    int N() const { return n_right; }
    const S& a(int k) const { assert(k >= 0 && k <= n_right); return a_seq[static_cast<size_t>(k)]; }
    const S& b(int k) const { assert(k >= 1 && k <= n_right); return b_seq[static_cast<size_t>(k - 1)]; }

    Mode mode() const { return mode_of<S>(); }
};

template <ScalarType S>
using CoeffPtr = std::shared_ptr<const Coefficients<S>>;

enum class CoeffErrorKind { too_small, length_mismatch, non_negative_a };

struct CoeffError {
    CoeffErrorKind kind;
    int index; // offending paper index for non_negative_a, else -1

    std::string message() const {
        switch (kind) {
            case CoeffErrorKind::too_small: return "N must be >= 2";
            case CoeffErrorKind::length_mismatch: return "sequence lengths must be N+1 (a) and N (b)";
            default: return "a(" + std::to_string(index) + ") must be strictly negative";
        }
    }
};

template <ScalarType S>
std::vector<CoeffError> validate(const Coefficients<S>& c) {
    std::vector<CoeffError> errs;
    if (c.n_right < 2) errs.push_back({CoeffErrorKind::too_small, -1});
    if (c.a_seq.size() != static_cast<size_t>(c.n_right) + 1 ||
        c.b_seq.size() != static_cast<size_t>(c.n_right)) {
        errs.push_back({CoeffErrorKind::length_mismatch, -1});
        return errs; // index checks below assume consistent lengths
    }
    for (int k = 0; k <= c.n_right; ++k)
        if (sign_of(c.a_seq[static_cast<size_t>(k)]) >= 0)
            errs.push_back({CoeffErrorKind::non_negative_a, k});
    return errs;
}

/// Validating constructor used by IO and generators; throws on bad data.
template <ScalarType S>
CoeffPtr<S> make_coefficients(int n, std::vector<S> a, std::vector<S> b, int zero_band_exp = -40) {
    auto c = std::make_shared<Coefficients<S>>();
    c->n_right = n;
    c->a_seq = std::move(a);
    c->b_seq = std::move(b);
    c->zero_band_exp = zero_band_exp;
    auto errs = validate(*c);
    if (!errs.empty()) throw InvalidCoefficientsError(errs.front().message());
    return c;
}

/// Builds full sequences from the matrix entries alone, filling the extension
/// slots with their defaults. diag = b(1..N-1), off = a(1..N-2).
template <ScalarType S>
CoeffPtr<S> from_interior(std::vector<S> diag, std::vector<S> off, int zero_band_exp = -40) {
    int n = static_cast<int>(diag.size()) + 1;
    if (off.size() + 1 != diag.size() && !(diag.size() == 1 && off.empty()))
        throw InvalidCoefficientsError("interior sizes must satisfy |off| = |diag| - 1");
    std::vector<S> a, b;
    a.reserve(static_cast<size_t>(n) + 1);
    a.push_back(S(-1));
    for (auto& v : off) a.push_back(std::move(v));
    a.push_back(S(-1)); // a(N-1)
    a.push_back(S(-1)); // a(N)
    b.reserve(static_cast<size_t>(n));
    for (auto& v : diag) b.push_back(std::move(v));
    b.push_back(S(0)); // b(N)
    return make_coefficients<S>(n, std::move(a), std::move(b), zero_band_exp);
}

/// Copy with the four extension slots replaced; the matrix view is unchanged.
template <ScalarType S>
CoeffPtr<S> with_extensions(const Coefficients<S>& c, S a0, S a_nm1, S a_n, S b_n) {
    auto out = std::make_shared<Coefficients<S>>(c);
    out->a_seq[0] = std::move(a0);
    out->a_seq[static_cast<size_t>(c.n_right) - 1] = std::move(a_nm1);
    out->a_seq[static_cast<size_t>(c.n_right)] = std::move(a_n);
    out->b_seq[static_cast<size_t>(c.n_right) - 1] = std::move(b_n);
    auto errs = validate(*out);
    if (!errs.empty()) throw InvalidCoefficientsError(errs.front().message());
    return out;
}

/// Read-only view of the (N-1)x(N-1) symmetric tridiagonal matrix:
/// diag(i) = b(i) for i = 1..N-1, off(i) = a(i) for i = 1..N-2.
template <ScalarType S>
struct JacobiMatrixView {
    std::span<const S> diag;
    std::span<const S> off;
    int dim() const { return static_cast<int>(diag.size()); }
};

template <ScalarType S>
JacobiMatrixView<S> matrix_of(const Coefficients<S>& c) {
    assert(c.n_right >= 2);
    return JacobiMatrixView<S>{
        std::span<const S>(c.b_seq.data(), static_cast<size_t>(c.n_right) - 1),
        std::span<const S>(c.a_seq.data() + 1, static_cast<size_t>(c.n_right >= 3 ? c.n_right - 2 : 0)),
    };
}

struct GenRanges {
    Rational a_lo{-3}, a_hi{-1}; // must stay strictly negative
    Rational b_lo{-2}, b_hi{2};
    int max_den = 16;
};

/// Deterministic per seed. Exact mode emits small-denominator rationals; float
/// mode converts the same draws.
template <ScalarType S>
CoeffPtr<S> random_coefficients(std::uint64_t seed, int n, const GenRanges& r = GenRanges{},
                                int zero_band_exp = -40) {
    if (!(r.a_hi.sign() < 0) || r.a_lo > r.a_hi)
        throw InvalidRangeError("a-range must be strictly negative and nonempty");
    if (r.b_lo > r.b_hi) throw InvalidRangeError("b-range must be nonempty");
    if (n < 2) throw InvalidRangeError("N must be >= 2");
    Rng rng(seed);
    std::vector<S> a, b;
    a.reserve(static_cast<size_t>(n) + 1);
    b.reserve(static_cast<size_t>(n));
    for (int k = 0; k <= n; ++k)
        a.push_back(scalar_from_rational<S>(rng.rational_in(r.a_lo, r.a_hi, r.max_den)));
    for (int k = 1; k <= n; ++k)
        b.push_back(scalar_from_rational<S>(rng.rational_in(r.b_lo, r.b_hi, r.max_den)));
    return make_coefficients<S>(n, std::move(a), std::move(b), zero_band_exp);
}

} // namespace relosc
