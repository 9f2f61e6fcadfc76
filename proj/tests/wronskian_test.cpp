#include "relosc/wronskian.hpp"

#include "relosc/rng.hpp"

#include <doctest.h>

using namespace relosc;

namespace {

CoeffPtr<Rational> free_op(int n) {
    std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(-1));
    std::vector<Rational> b(static_cast<size_t>(n), Rational(0));
    return make_coefficients<Rational>(n, std::move(a), std::move(b));
}

// 2x2 operator with rational spectrum {-1, 4}: b = (3, 0), a(1) = -2.
CoeffPtr<Rational> rational_spectrum_op() {
    return make_coefficients<Rational>(
        3, {Rational(-1), Rational(-2), Rational(-1), Rational(-1)},
        {Rational(3), Rational(0), Rational(0)});
}

struct WorkedPair {
    CoeffPtr<Rational> c;
    SolutionPath<Rational> u0, u1;
    WronskianPath<Rational> w;
};

WorkedPair worked() {
    WorkedPair wp{free_op(4), {}, {}, {}};
    wp.u0 = solve_plus(wp.c, Rational(-1));  // (1, 0, -1, -1, 0, 1)
    wp.u1 = solve_minus(wp.c, Rational(1));  // (0, 1, -1, 0, 1, -1)
    wp.w = wronskian_path(*wp.c, *wp.c, wp.u0, wp.u1);
    return wp;
}

} // namespace

TEST_CASE("worked instance: W sequence and marks, bit-exact") {
    auto wp = worked();
    REQUIRE(wp.w.w.size() == 5);
    CHECK(wp.w.w == std::vector<Rational>{-1, -1, 1, 1, 1});
    CHECK(wp.w.marks == std::vector<std::int8_t>{0, 1, 0, 0});
    CHECK(weighted_node_mark(wp.w, 0) == 0);
    CHECK(weighted_node_mark(wp.w, 1) == 1);
    CHECK(interval_count(wp.w, 0, 4, IntervalConvention::left_open) == 1);
    CHECK(interval_count(wp.w, 0, 4, IntervalConvention::closed) == 1);
    CHECK(interval_count(wp.w, 0, 4, IntervalConvention::right_open) == 1);
    CHECK(interval_count(wp.w, 0, 4, IntervalConvention::open) == 1);
}

TEST_CASE("same operator, same z: constant Wronskian") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto c = random_coefficients<Rational>(rng.next(), n);
        Rational z = rng.rational_in(Rational(-8), Rational(8), 8);
        auto u0 = solve_custom(c, z, Rational(1), Rational(0));
        auto u1 = solve_custom(c, z, Rational(0), Rational(1));
        auto w = wronskian_path(*c, *c, u0, u1);
        for (int k = 0; k <= n; ++k) CHECK(w.w[static_cast<size_t>(k)] == w.w[0]);
        CHECK_FALSE(w.w[0].is_zero()); // independent initial data
        for (int k = 0; k < n; ++k) CHECK(weighted_node_mark(w, k) == 0);
        // a solution against itself vanishes identically
        auto wz = wronskian_path(*c, *c, u0, u0);
        for (int k = 0; k <= n; ++k) CHECK(wz.w[static_cast<size_t>(k)].is_zero());
    }
}

TEST_CASE("interval corrections at W = 0 endpoints") {
    // lambda = 4 is an eigenvalue of the 2x2 rational-spectrum operator:
    // the Dirichlet pair is dependent, W vanishes identically.
    auto c = rational_spectrum_op();
    auto u0 = solve_plus(c, Rational(4));
    auto u1 = solve_minus(c, Rational(4));
    auto w = wronskian_path(*c, *c, u0, u1);
    for (auto s : w.w_sign) CHECK(s == 0);
    CHECK(interval_count(w, 0, 3, IntervalConvention::left_open) == -1);
    CHECK(interval_count(w, 0, 3, IntervalConvention::closed) == 0);
    CHECK(interval_count(w, 0, 3, IntervalConvention::right_open) == 1);
    CHECK(interval_count(w, 0, 3, IntervalConvention::open) == 0);

    // off the spectrum the pair is independent: every convention gives 0
    auto v0 = solve_plus(c, Rational(7, 3));
    auto v1 = solve_minus(c, Rational(7, 3));
    auto wv = wronskian_path(*c, *c, v0, v1);
    CHECK_FALSE(wv.w[0].is_zero());
    for (auto conv : {IntervalConvention::closed, IntervalConvention::left_open,
                      IntervalConvention::right_open, IntervalConvention::open})
        CHECK(interval_count(wv, 0, 3, conv) == 0);
}

TEST_CASE("greens residual vanishes") {
    // same operator: residual 0 and W constant
    auto c = free_op(5);
    auto u0 = solve_minus(c, Rational(1, 2));
    auto u1 = solve_plus(c, Rational(1, 2));
    CHECK(greens_residual(*c, *c, u0, u1, 1, 5).is_zero());

    // worked pair after the b-shift aligning both to z = -1
    auto c4 = free_op(4);
    auto w0 = solve_plus(c4, Rational(-1));
    auto w1 = solve_minus(c4, Rational(1));
    auto cs = shift_b(*c4, Rational(2));
    auto w1s = reinterpret_shifted(w1, cs, Rational(-1));
    CHECK(greens_residual(*c4, *cs, w0, w1s, 1, 4).is_zero());

    // random perturbed pairs over random windows
    Rng rng(43);
    for (int i = 0; i < 400; ++i) {
        int n = 2 + static_cast<int>(rng.below(12));
        auto c0 = random_coefficients<Rational>(rng.next(), n);
        auto c1 = random_coefficients<Rational>(rng.next(), n);
        Rational z = rng.rational_in(Rational(-8), Rational(8), 8);
        auto p0 = solve_minus(c0, z);
        auto p1 = solve_plus(c1, z);
        int lo = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int hi = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - lo + 1)));
        CHECK(greens_residual(*c0, *c1, p0, p1, lo, hi).is_zero());
    }
    CHECK_THROWS_AS(greens_residual(*c, *c, solve_minus(c, Rational(0)),
                                    solve_minus(c, Rational(1)), 1, 3),
                    std::invalid_argument);
}

TEST_CASE("mark via the delta path equals the sign-based mark") {
    auto wp = worked();
    auto cs = shift_b(*wp.c, Rational(2));
    auto u1s = reinterpret_shifted(wp.u1, cs, Rational(-1));
    auto p0 = pruefer_of(*wp.c, wp.u0);
    auto p1 = pruefer_of(*cs, u1s);
    std::vector<int> ws(wp.w.w_sign.begin(), wp.w.w_sign.end());
    auto d = delta_of(p0, p1, ws);
    for (int k = 0; k < 4; ++k) CHECK(mark_via_pruefer(d, k) == weighted_node_mark(wp.w, k));
    // constant delta means no marks
    auto dd = delta_of(p0, p0, std::vector<int>(5, 0));
    for (int k = 0; k < 4; ++k) CHECK(mark_via_pruefer(dd, k) == 0);
}

TEST_CASE("antisymmetry of interval counts under argument swap") {
    Rng rng(47);
    for (int i = 0; i < 250; ++i) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto c0 = random_coefficients<Rational>(rng.next(), n);
        auto c1 = random_coefficients<Rational>(rng.next(), n);
        Rational z0 = rng.rational_in(Rational(-8), Rational(8), 8);
        Rational z1 = rng.chance(1, 4) ? z0 : rng.rational_in(Rational(-8), Rational(8), 8);
        auto u0 = solve_plus(c0, z0);
        auto u1 = solve_minus(c1, z1);
        auto w01 = wronskian_path(*c0, *c1, u0, u1);
        auto w10 = wronskian_path(*c1, *c0, u1, u0);
        // pointwise: W(u1,u0) = -W(u0,u1)
        for (int k = 0; k <= n; ++k)
            CHECK(w10.w[static_cast<size_t>(k)] == -w01.w[static_cast<size_t>(k)]);
        int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int l = m + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - m)));
        CHECK(interval_count(w01, m, l, IntervalConvention::closed) ==
              -interval_count(w10, m, l, IntervalConvention::open));
        CHECK(interval_count(w01, m, l, IntervalConvention::left_open) ==
              -interval_count(w10, m, l, IntervalConvention::right_open));
        if (w01.w_sign[static_cast<size_t>(m)] != 0 && w01.w_sign[static_cast<size_t>(l)] != 0)
            CHECK(interval_count(w01, m, l, IntervalConvention::closed) ==
                  -interval_count(w10, m, l, IntervalConvention::closed));
    }
}

TEST_CASE("bilinearity and scaling invariance of marks") {
    Rng rng(53);
    for (int i = 0; i < 150; ++i) {
        int n = 2 + static_cast<int>(rng.below(8));
        auto c0 = random_coefficients<Rational>(rng.next(), n);
        auto c1 = random_coefficients<Rational>(rng.next(), n);
        Rational z = rng.rational_in(Rational(-8), Rational(8), 8);
        auto u0 = solve_plus(c0, z);
        auto u1 = solve_minus(c1, z);
        auto w = wronskian_path(*c0, *c1, u0, u1);
        Rational scale(-7, 3);
        auto w_scaled = wronskian_path(*c0, *c1, scale_path(u0, scale), u1);
        for (int k = 0; k <= n; ++k)
            CHECK(w_scaled.w[static_cast<size_t>(k)] == scale * w.w[static_cast<size_t>(k)]);
        CHECK(w_scaled.marks == w.marks);
        auto w_scaled2 = wronskian_path(*c0, *c1, u0, scale_path(u1, Rational(5, 2)));
        CHECK(w_scaled2.marks == w.marks);
    }
}

TEST_CASE("zero patterns of W around solution zeros") {
    Rng rng(59);
    long plus_minus_sites = 0;
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto c0 = random_coefficients<Rational>(rng.next(), n);
        auto c1 = random_coefficients<Rational>(rng.next(), n);
        Rational z0 = rng.rational_in(Rational(-8), Rational(8), 8);
        Rational z1 = rng.rational_in(Rational(-8), Rational(8), 8);
        auto u0 = solve_plus(c0, z0);
        auto u1 = solve_minus(c1, z1);
        auto w = wronskian_path(*c0, *c1, u0, u1);
        for (int k = 0; k < n; ++k) {
            bool z0k = u0.at(k + 1).is_zero(), z1k = u1.at(k + 1).is_zero();
            if (z0k && z1k) {
                CHECK(w.w_sign[static_cast<size_t>(k)] == 0);
                CHECK(w.w_sign[static_cast<size_t>(k) + 1] == 0);
            } else if (z0k || z1k) {
                CHECK(w.w_sign[static_cast<size_t>(k)] * w.w_sign[static_cast<size_t>(k) + 1] == 1);
            }
            if (weighted_node_mark(w, k) != 0) {
                ++plus_minus_sites;
                CHECK_FALSE(u0.at(k + 1).is_zero());
                CHECK_FALSE(u1.at(k + 1).is_zero());
            }
        }
    }
    CHECK(plus_minus_sites > 0);
}

TEST_CASE("marked sites require a genuine perturbation (Delta a or Delta b)") {
    // in the same-z framing: shift b1 so both solutions share z, then every
    // +-1 site must see Delta a(n) != 0 or Delta b(n+1) != 0
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng.below(10));
        auto c0 = random_coefficients<Rational>(rng.next(), n);
        auto c1 = random_coefficients<Rational>(rng.next(), n);
        Rational z0 = rng.rational_in(Rational(-8), Rational(8), 8);
        Rational z1 = rng.rational_in(Rational(-8), Rational(8), 8);
        auto u0 = solve_plus(c0, z0);
        auto u1 = solve_minus(c1, z1);
        auto c1s = shift_b(*c1, z1 - z0);
        auto u1s = reinterpret_shifted(u1, c1s, z0);
        auto w = wronskian_path(*c0, *c1s, u0, u1s);
        for (int k = 0; k < n; ++k) {
            if (weighted_node_mark(w, k) == 0) continue;
            bool da = !(c0->a(k) - c1s->a(k)).is_zero();
            bool db = !(c0->b(k + 1) - c1s->b(k + 1)).is_zero();
            CHECK((da || db));
        }
    }
}
