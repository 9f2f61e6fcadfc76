#include "relosc/recurrence.hpp"

#include "relosc/rng.hpp"

#include <doctest.h>

using namespace relosc;

namespace {

CoeffPtr<Rational> free_op(int n) {
    std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(-1));
    std::vector<Rational> b(static_cast<size_t>(n), Rational(0));
    return make_coefficients<Rational>(n, std::move(a), std::move(b));
}

std::vector<Rational> values(const SolutionPath<Rational>& p) { return p.u; }

} // namespace

TEST_CASE("step_forward on the free operator") {
    auto c = free_op(4);
    // -u(n+1) - u(n-1) = z u(n)  =>  u(n+1) = -z u(n) - u(n-1) at z = 1
    CHECK(step_forward(*c, Rational(1), 1, Rational(0), Rational(1)) == Rational(-1));
    CHECK(step_forward(*c, Rational(-1), 1, Rational(1), Rational(0)) == Rational(1));
    CHECK_THROWS_AS(step_forward(*c, Rational(1), 1, Rational(0), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("worked instance: s_- at z = 1") {
    auto c = free_op(4);
    auto u = solve_minus(c, Rational(1));
    CHECK(values(u) == std::vector<Rational>{0, 1, -1, 0, 1, -1});
    CHECK(u.bc == BcTag::minus);
}

TEST_CASE("worked instance: s_+ at z = -1") {
    auto c = free_op(4);
    auto u = solve_plus(c, Rational(-1));
    CHECK(values(u) == std::vector<Rational>{1, 0, -1, -1, 0, 1});
    CHECK(u.bc == BcTag::plus);
}

TEST_CASE("initial conditions hold for arbitrary coefficients") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto c = random_coefficients<Rational>(seed, 2 + static_cast<int>(seed % 9));
        Rng rng(seed);
        Rational z = rng.rational_in(Rational(-9), Rational(9), 12);
        auto um = solve_minus(c, z);
        CHECK(um.at(0) == Rational(0));
        CHECK(um.at(1) == Rational(1));
        auto up = solve_plus(c, z);
        CHECK(up.at(c->N()) == Rational(0));
        CHECK(up.at(c->N() + 1) == Rational(1));
    }
}

TEST_CASE("1x1 eigenvalue flags u(2) = 0") {
    auto c = make_coefficients<Rational>(2, {-1, -1, -1}, {Rational(5, 3), Rational(0)});
    auto u = solve_minus(c, Rational(5, 3));
    CHECK(u.at(2) == Rational(0));
}

TEST_CASE("is_node on the worked path") {
    auto c = free_op(4);
    auto u = solve_minus(c, Rational(1)); // (0, 1, -1, 0, 1, -1)
    CHECK(is_node(*c, u, 0));             // u(0) = 0
    CHECK(is_node(*c, u, 1));             // a u(1) u(2) = (-1)(1)(-1) = 1 > 0
    CHECK_FALSE(is_node(*c, u, 2));       // product 0, u(2) != 0
    CHECK(is_node(*c, u, 3));             // u(3) = 0
    CHECK(is_node(*c, u, 4));             // a u(4) u(5) = 1 > 0
}

TEST_CASE("count_nodes: worked counts and the boundary clause") {
    auto c = free_op(4);
    auto u = solve_minus(c, Rational(1));
    CHECK(count_nodes(u, 0, 4) == 2); // nodes at 1 and 3; m = 0 has u(0) = 0
    CHECK(count_nodes(u, 1, 4) == 2); // node at m = 1 counts: u(1) = 1 != 0
    CHECK(count_nodes(u, 0, 5) == 3);
}

TEST_CASE("count_nodes: positive solution has none") {
    auto c = free_op(6);
    auto u = solve_custom(c, Rational(-3), Rational(1), Rational(2));
    for (int n = 0; n <= 7; ++n) CHECK(u.at(n).sign() == 1);
    CHECK(count_nodes(u, 0, 7) == 0);
}

TEST_CASE("random instances: structural invariants of solutions") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed);
        int n = 2 + static_cast<int>(rng.below(12));
        auto c = random_coefficients<Rational>(seed ^ 0xabcdef, n);
        Rational z = rng.rational_in(Rational(-10), Rational(10), 16);
        for (auto u : {solve_minus(c, z), solve_plus(c, z),
                       solve_custom(c, z, rng.rational_in(Rational(-3), Rational(3), 8), Rational(1))}) {
            for (int k = 0; k <= n; ++k) {
                bool both_zero = u.at(k).is_zero() && u.at(k + 1).is_zero();
                CHECK_FALSE(both_zero);
            }
            for (int k = 1; k <= n; ++k)
                if (u.at(k).is_zero()) CHECK((u.at(k - 1) * u.at(k + 1)).sign() == -1);
            for (int k = 1; k <= n; ++k) {
                Rational res = c->a(k) * u.at(k + 1) + c->a(k - 1) * u.at(k - 1) +
                               (c->b(k) - z) * u.at(k);
                CHECK(res.is_zero());
            }
        }
    }
}

TEST_CASE("node counts are invariant under nonzero scaling") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        auto c = random_coefficients<Rational>(rng.next(), 2 + static_cast<int>(rng.below(10)));
        Rational z = rng.rational_in(Rational(-8), Rational(8), 8);
        auto u = solve_minus(c, z);
        for (Rational scale : {Rational(2), Rational(-3, 5), Rational(7, 4)}) {
            auto v = scale_path(u, scale);
            CHECK(count_nodes(v, 0, c->N() + 1) == count_nodes(u, 0, c->N() + 1));
        }
    }
    CHECK_THROWS_AS(scale_path(solve_minus(free_op(3), Rational(0)), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("float mode: relative residual stays tiny") {
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        int n = 3 + static_cast<int>(rng.below(30));
        auto c = random_coefficients<ScaledFloat>(rng.next(), n);
        ScaledFloat z = to_scaled_float(rng.rational_in(Rational(-9), Rational(9), 16));
        auto u = solve_minus(c, z);
        for (int k = 1; k <= n; ++k) {
            ScaledFloat t1 = c->a(k) * u.at(k + 1);
            ScaledFloat t2 = c->a(k - 1) * u.at(k - 1);
            ScaledFloat t3 = (c->b(k) - z) * u.at(k);
            ScaledFloat res = t1 + t2 + t3;
            ScaledFloat scale = max_magnitude(max_magnitude(t1, t2), t3);
            if (scale.is_zero()) continue;
            CHECK((res.abs() / scale).to_double() <= 1e-12);
        }
    }
}

TEST_CASE("float mode: N = 500 propagation does not overflow") {
    auto c = random_coefficients<ScaledFloat>(123, 500);
    auto u = solve_minus(c, ScaledFloat::from_double(0.375));
    for (const auto& v : u.u) CHECK(std::isfinite(v.mantissa()));
    CHECK_FALSE(u.sign_uncertain);
}

TEST_CASE("shift_b relabels solutions exactly") {
    auto c = random_coefficients<Rational>(31, 6);
    Rational z1(7, 2), z0(1, 2);
    auto u = solve_minus(c, z1);
    auto shifted = shift_b(*c, z1 - z0);
    auto v = reinterpret_shifted(u, shifted, z0);
    CHECK(v.z == z0);
    CHECK(v.u == u.u);
    // relabeling against the wrong operator is rejected in exact mode
    CHECK_THROWS_AS(reinterpret_shifted(u, c, z0), std::invalid_argument);
}
