#include "relosc/coeffs.hpp"

#include "relosc/io.hpp"

#include <doctest.h>

using namespace relosc;

namespace {

Coefficients<Rational> raw_coeffs(int n, std::vector<Rational> a, std::vector<Rational> b) {
    Coefficients<Rational> c;
    c.n_right = n;
    c.a_seq = std::move(a);
    c.b_seq = std::move(b);
    return c;
}

} // namespace

TEST_CASE("validate: smallest legal instance") {
    auto c = raw_coeffs(2, {-1, -1, -1}, {0, 0});
    CHECK(validate(c).empty());
}

TEST_CASE("validate: nonnegative a is reported with its index") {
    auto c = raw_coeffs(3, {-1, 0, -1, -1}, {1, 2, 3});
    auto errs = validate(c);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].kind == CoeffErrorKind::non_negative_a);
    CHECK(errs[0].index == 1);
}

TEST_CASE("validate: free Laplacian-like instance") {
    auto c = raw_coeffs(4, {-1, -1, -1, -1, -1}, {0, 0, 0, 0});
    CHECK(validate(c).empty());
}

TEST_CASE("validate: length mismatch and too-small N") {
    auto c = raw_coeffs(4, {-1, -1, -1}, {0, 0, 0, 0});
    auto errs = validate(c);
    REQUIRE(errs.size() == 1);
    CHECK(errs[0].kind == CoeffErrorKind::length_mismatch);
    auto d = raw_coeffs(1, {-1, -1}, {0});
    bool too_small = false;
    for (const auto& e : validate(d)) too_small = too_small || e.kind == CoeffErrorKind::too_small;
    CHECK(too_small);
    CHECK_THROWS_AS(make_coefficients<Rational>(3, {Rational(-1)}, {Rational(0)}),
                    InvalidCoefficientsError);
}

TEST_CASE("matrix_of: dimension and entries") {
    auto c2 = make_coefficients<Rational>(2, {-1, -1, -1}, {Rational(7), Rational(0)});
    auto v2 = matrix_of(*c2);
    CHECK(v2.dim() == 1);
    CHECK(v2.diag[0] == Rational(7));
    CHECK(v2.off.empty());

    auto c4 = make_coefficients<Rational>(4, {-1, -1, -1, -1, -1}, {0, 0, 0, 0});
    auto v4 = matrix_of(*c4);
    CHECK(v4.dim() == 3);
    CHECK(v4.off.size() == 2);
    CHECK(v4.off[0] == Rational(-1));

    auto c3 = make_coefficients<Rational>(3, {Rational(-1), Rational(-2), Rational(-1), Rational(-1)},
                                          {Rational(5), Rational(7), Rational(0)});
    auto v3 = matrix_of(*c3);
    CHECK(v3.dim() == 2);
    CHECK(v3.diag[0] == Rational(5));
    CHECK(v3.diag[1] == Rational(7));
    CHECK(v3.off[0] == Rational(-2));
}

TEST_CASE("matrix view ignores extension slots") {
    auto c = make_coefficients<Rational>(4, {-1, -2, -3, -1, -1}, {1, 2, 3, 0});
    auto v = matrix_of(*c);
    auto mutated = with_extensions(*c, Rational(-7), Rational(-1, 3), Rational(-5), Rational(9));
    auto w = matrix_of(*mutated);
    REQUIRE(v.dim() == w.dim());
    for (int i = 0; i < v.dim(); ++i) CHECK(v.diag[static_cast<size_t>(i)] == w.diag[static_cast<size_t>(i)]);
    for (size_t i = 0; i < v.off.size(); ++i) CHECK(v.off[i] == w.off[i]);
}

TEST_CASE("random coefficients: deterministic and always valid") {
    auto a = random_coefficients<Rational>(1, 5);
    auto b = random_coefficients<Rational>(1, 5);
    CHECK(a->a_seq == b->a_seq);
    CHECK(a->b_seq == b->b_seq);
    auto c = random_coefficients<Rational>(2, 5);
    CHECK(a->a_seq != c->a_seq);

    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        auto r = random_coefficients<Rational>(seed, 2 + static_cast<int>(seed % 7));
        CHECK(validate(*r).empty());
    }
}

TEST_CASE("random coefficients: float mode emits the same draws") {
    GenRanges gr;
    auto ex = random_coefficients<Rational>(99, 6, gr);
    auto fl = random_coefficients<ScaledFloat>(99, 6, gr);
    for (size_t i = 0; i < ex->a_seq.size(); ++i)
        CHECK(to_rational(fl->a_seq[i]) == ex->a_seq[i]);
}

TEST_CASE("random coefficients: range containing zero is rejected") {
    GenRanges bad;
    bad.a_lo = Rational(-1);
    bad.a_hi = Rational(1);
    CHECK_THROWS_AS(random_coefficients<Rational>(1, 4, bad), InvalidRangeError);
}

TEST_CASE("coefficient JSON round-trip") {
    auto c = random_coefficients<Rational>(5, 6);
    auto raw = to_raw(*c);
    auto back = parse_coefficients_json(coefficients_to_json(raw));
    CHECK(back.n == raw.n);
    for (size_t i = 0; i < raw.a.size(); ++i) CHECK(back.a[i] == raw.a[i]);
    for (size_t i = 0; i < raw.b.size(); ++i) CHECK(back.b[i] == raw.b[i]);
    CHECK(back.declared_mode == Mode::exact);
}

TEST_CASE("coefficient JSON rejects malformed input") {
    CHECK_THROWS_AS(parse_coefficients_json("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_coefficients_json("{\"N\": 3, \"a\": [\"-1\"], \"b\": []}"), ParseError);
    CHECK_THROWS_AS(parse_coefficients_json("[1,2,3]"), ParseError);
    // valid shape, invalid content (a >= 0) is a validation error at materialize time
    auto raw = parse_coefficients_json(
        R"({"N": 2, "a": ["1", "-1", "-1"], "b": ["0", "0"], "mode": "exact"})");
    CHECK_THROWS_AS(materialize<Rational>(raw), InvalidCoefficientsError);
}

TEST_CASE("from_interior fills defaults") {
    auto c = from_interior<Rational>({Rational(5), Rational(7)}, {Rational(-2)});
    CHECK(c->N() == 3);
    CHECK(c->a(0) == Rational(-1));
    CHECK(c->a(1) == Rational(-2));
    CHECK(c->a(2) == Rational(-1));
    CHECK(c->a(3) == Rational(-1));
    CHECK(c->b(1) == Rational(5));
    CHECK(c->b(2) == Rational(7));
    CHECK(c->b(3) == Rational(0));
}
