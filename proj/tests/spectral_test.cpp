#include "relosc/spectral.hpp"

#include "relosc/recurrence.hpp"
#include "relosc/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace relosc;

namespace {

SymTridiag<Rational> toeplitz3() {
    return SymTridiag<Rational>{{0, 0, 0}, {-1, -1}}; // spectrum -sqrt2, 0, sqrt2
}

} // namespace

TEST_CASE("sturm count on the 3x3 Toeplitz block") {
    auto t = toeplitz3();
    CHECK(sturm_count_below(t, Rational(1)).count == 2);
    CHECK(sturm_count_below(t, Rational(0)).count == 1);
    CHECK(sturm_count_below(t, Rational(0)).membership);
    auto r = count_below(t, Rational(0), true);
    CHECK(r.lo == 2);
    CHECK(r.certain());
    CHECK(count_below(t, Rational(0), false).lo == 1);
}

TEST_CASE("sturm count on a 1x1 block") {
    SymTridiag<Rational> t{{Rational(5, 2)}, {}};
    CHECK(count_below(t, Rational(5, 2), false).lo == 0);
    CHECK(count_below(t, Rational(5, 2), true).lo == 1);
    CHECK(sturm_count_below(t, Rational(5, 2)).membership);
}

TEST_CASE("eig_all on closed-form spectra") {
    Spectrum s3 = eig_all_tridiag({0, 0, 0}, {-1, -1});
    REQUIRE(s3.eigenvalues.size() == 3);
    CHECK(s3.eigenvalues[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::fabs(s3.eigenvalues[1]) < 1e-12);
    CHECK(s3.eigenvalues[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    Spectrum s2 = eig_all_tridiag({5, 7}, {-2});
    REQUIRE(s2.eigenvalues.size() == 2);
    CHECK(s2.eigenvalues[0] == doctest::Approx(6.0 - std::sqrt(5.0)).epsilon(1e-12));
    CHECK(s2.eigenvalues[1] == doctest::Approx(6.0 + std::sqrt(5.0)).epsilon(1e-12));

    Spectrum s1 = eig_all_tridiag({-3.25}, {});
    REQUIRE(s1.eigenvalues.size() == 1);
    CHECK(s1.eigenvalues[0] == doctest::Approx(-3.25));
}

TEST_CASE("count_window combinations") {
    auto c = make_coefficients<Rational>(4, {-1, -1, -1, -1, -1}, {0, 0, 0, 0});
    auto j = matrix_of(*c);
    CHECK(count_window(j, Rational(-1), Rational(1), true, true).lo == 1);
    // degenerate windows at a non-member: every variant gives 0
    for (bool lo : {false, true})
        for (bool ro : {false, true})
            CHECK(count_window(j, Rational(1, 3), Rational(1, 3), lo, ro).lo == 0);
    // at a member: the (open, open) window double-counts the endpoint as -1
    CHECK(count_window(j, Rational(0), Rational(0), true, true).lo == -1);
    CHECK(count_window(j, Rational(0), Rational(0), false, false).lo == 1);
}

TEST_CASE("membership equivalence: minor zero iff Dirichlet solutions close up") {
    // rational spectrum {-1, 4}: b = (3, 0), a(1) = -2
    auto c = make_coefficients<Rational>(3, {Rational(-1), Rational(-2), Rational(-1), Rational(-1)},
                                         {Rational(3), Rational(0), Rational(0)});
    auto t = tridiag_of(matrix_of(*c));
    for (Rational z : {Rational(4), Rational(-1)}) {
        CHECK(sturm_count_below(t, z).membership);
        CHECK(solve_minus(c, z).at(3).is_zero());
        CHECK(solve_plus(c, z).at(0).is_zero());
    }
    for (Rational z : {Rational(0), Rational(7, 2), Rational(9)}) {
        CHECK_FALSE(sturm_count_below(t, z).membership);
        CHECK_FALSE(solve_minus(c, z).at(3).is_zero());
        CHECK_FALSE(solve_plus(c, z).at(0).is_zero());
    }
    Rng rng(67);
    for (int i = 0; i < 200; ++i) {
        auto cc = random_coefficients<Rational>(rng.next(), 2 + static_cast<int>(rng.below(10)));
        Rational z = rng.rational_in(Rational(-9), Rational(9), 12);
        bool member = sturm_count_below(tridiag_of(matrix_of(*cc)), z).membership;
        CHECK(member == solve_minus(cc, z).at(cc->N()).is_zero());
        CHECK(member == solve_plus(cc, z).at(0).is_zero());
    }
}

TEST_CASE("classical oscillation: node counts equal the Sturm count") {
    Rng rng(71);
    for (int i = 0; i < 500; ++i) {
        auto c = random_coefficients<Rational>(rng.next(), 2 + static_cast<int>(rng.below(14)));
        Rational z = rng.rational_in(Rational(-10), Rational(10), 16);
        long sturm = count_below(matrix_of(*c), z, false).lo;
        CHECK(sturm == count_nodes(solve_minus(c, z), 0, c->N()));
        CHECK(sturm == count_nodes(solve_plus(c, z), 0, c->N()));
    }
}

TEST_CASE("float mode: membership knife edge becomes a reported range") {
    auto c = make_coefficients<ScaledFloat>(
        3, {ScaledFloat(-1), ScaledFloat(-2), ScaledFloat(-1), ScaledFloat(-1)},
        {ScaledFloat(3), ScaledFloat(0), ScaledFloat(0)});
    auto j = matrix_of(*c);
    auto r = count_below(j, ScaledFloat(4), true);
    CHECK(r.lo == 1);
    CHECK(r.hi == 2);
    CHECK(r.uncertain);
    // far from the spectrum the range collapses
    auto r2 = count_below(j, ScaledFloat(2), true);
    CHECK(r2.lo == 1);
    CHECK(r2.hi == 1);
    CHECK_FALSE(r2.uncertain);
}

TEST_CASE("eig_all agrees with exact sturm counts between eigenvalues") {
    Rng rng(73);
    for (int i = 0; i < 200; ++i) {
        auto c = random_coefficients<Rational>(rng.next(), 2 + static_cast<int>(rng.below(12)));
        auto view = matrix_of(*c);
        Spectrum spec = eig_all(view);
        CHECK(spec.min_gap > 0.0);
        auto t = tridiag_of(view);
        for (size_t k = 0; k + 1 < spec.eigenvalues.size(); ++k) {
            double mid = 0.5 * (spec.eigenvalues[k] + spec.eigenvalues[k + 1]);
            CHECK(sturm_count_below(t, Rational::from_double(mid)).count ==
                  static_cast<long>(k) + 1);
        }
    }
}

TEST_CASE("zero off-diagonals split into independent blocks") {
    SymTridiag<Rational> t{{Rational(0), Rational(0)}, {Rational(0)}};
    CHECK(count_below_splitting(t, Rational(0)).count == 0);
    CHECK(count_below_splitting(t, Rational(1, 2)).count == 2);
    CHECK_THROWS_AS(sturm_count_below(t, Rational(0)), std::invalid_argument);

    SymTridiag<Rational> psd{{Rational(2), Rational(2)}, {Rational(-1)}}; // eigenvalues 1, 3
    CHECK(is_positive_semidefinite(psd));
    SymTridiag<Rational> indef{{Rational(1), Rational(1)}, {Rational(2)}}; // eigenvalues -1, 3
    CHECK_FALSE(is_positive_semidefinite(indef));
}

TEST_CASE("gershgorin bounds enclose the spectrum") {
    Rng rng(79);
    for (int i = 0; i < 100; ++i) {
        auto c = random_coefficients<Rational>(rng.next(), 2 + static_cast<int>(rng.below(10)));
        auto view = matrix_of(*c);
        auto [lo, hi] = gershgorin_bounds(view);
        CHECK(count_below(view, lo, false).lo == 0);          // nothing strictly below lo
        CHECK(count_below(view, hi, true).lo == view.dim());  // everything at or below hi
    }
}
