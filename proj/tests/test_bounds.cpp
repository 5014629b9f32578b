#include "doctest.h"
#include "oracles.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ddc/bounds.hpp"
#include "ddc/construct.hpp"
#include "ddc/enumerate.hpp"

using namespace ddc;
using Dec = boost::multiprecision::cpp_dec_float_100;

namespace {

// Independent 50-digit evaluations (mpmath, mp.dps = 60) of
// 2n(4n²-3n+1) / ((2n-1)^(1/3)·((2n-1)^(2/3)-1)).
const char* const kConstant2 = "28.245859645619236979407448220613392611107924018264";
const char* const kConstant3 = "51.063456460234891417181264412000112659019083862943";

// True when the directed decimal lies on the safe side of the reference and
// within `tol` of it. The decimals carry 40 significant digits.
bool safe_and_close(const BoundValue& b, const Dec& reference, const Dec& tol) {
    const Dec got(b.decimal);
    const Dec slack("1e-45");
    if (b.direction == Direction::Upper && got < reference - slack) return false;
    if (b.direction == Direction::Lower && got > reference + slack) return false;
    return abs(got - reference) <= tol;
}

std::size_t brute_two_ball_union(int n, int rho) {
    const GroupCtx ctx(n);
    const Word a{};
    const Word b = ctx.word({1});
    std::size_t count = 0;
    for (const auto& w : ball_words(ctx, static_cast<std::size_t>(rho + 1))) {
        if (dist(a, w) <= static_cast<std::size_t>(rho) || dist(b, w) <= static_cast<std::size_t>(rho)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("elementary bound") {
    const GroupCtx two(2);
    CHECK(elementary_bound(two, 0) == 1);
    CHECK(elementary_bound(two, 2) == 4);
    CHECK(elementary_bound(two, 4) == 13);
    for (int n = 2; n <= 5; ++n) {
        for (int d = 0; d <= 40; ++d) {
            const GroupCtx ctx(n);
            const BigInt m = elementary_bound(ctx, d);
            const BigInt ball = ball_size(ctx, static_cast<std::size_t>(d));
            CHECK(m * (m - 1) <= ball);
            CHECK((m + 1) * m > ball);
        }
    }
}

TEST_CASE("largest subset of a given diameter") {
    const GroupCtx two(2);
    CHECK(max_subset_size(two, 0) == 1);
    CHECK(max_subset_size(two, 2) == 5);
    CHECK(max_subset_size(two, 3) == 8);
    for (int n = 2; n <= 3; ++n) {
        for (int rho = 0; rho <= 3; ++rho) {
            CHECK(max_subset_size(GroupCtx(n), 2 * rho + 1) == brute_two_ball_union(n, rho));
            CHECK(max_subset_size(GroupCtx(n), 2 * rho) == ball_size(GroupCtx(n), static_cast<std::size_t>(rho)));
        }
    }
}

TEST_CASE("upper-bound constant against an independent evaluation") {
    const Dec tol("1e-38");
    const BoundValue c2 = thm_constant(GroupCtx(2));
    CHECK(c2.direction == Direction::Upper);
    CHECK(safe_and_close(c2, Dec(kConstant2), tol));
    CHECK(std::abs(c2.value - 28.245859645619237) < 1e-12);
    const BoundValue c3 = thm_constant(GroupCtx(3));
    CHECK(safe_and_close(c3, Dec(kConstant3), tol));

    CHECK(safe_and_close(thm_upper_bound(GroupCtx(2), 3), Dec(kConstant2) * 3, tol * 100));
    CHECK(safe_and_close(thm_upper_bound(GroupCtx(3), 6), Dec(kConstant3) * 25, tol * 10000));
    CHECK(thm_upper_expression(GroupCtx(2), 3) == "44 * 3^(3/3) / (3^(1/3) * (3^(2/3) - 1))");
    CHECK_THROWS_AS(thm_constant(GroupCtx(1)), Error);
    CHECK_THROWS_AS(thm_upper_bound(GroupCtx(2), 0), Error);
}

TEST_CASE("upper bound scales by (2n-1)^(1/3) per unit of d") {
    for (int n = 2; n <= 5; ++n) {
        const Dec q(2 * n - 1);
        const Dec third = Dec(1) / 3;
        const Dec c = Dec(2 * n * (4 * n * n - 3 * n + 1)) / (pow(q, third) * (pow(q, 2 * third) - 1));
        CHECK(safe_and_close(thm_constant(GroupCtx(n)), c, c * Dec("1e-38")));
        for (int d = 3; d <= 60; d += 3) {
            const Dec expected = c * pow(q, d / 3);
            CHECK(safe_and_close(thm_upper_bound(GroupCtx(n), d), expected, expected * Dec("1e-36")));
        }
    }
}

TEST_CASE("eta bound") {
    const GroupCtx two(2);
    CHECK(eta_bound_exact(two, 24, 1) == 756);
    CHECK(eta_bound_exact(two, 6, 1) == BigRational(4, 27));
    CHECK(eta_bound_exact(two, 12, 1) == 4);
    CHECK(eta_bound(two, 24, 1).decimal == "756");
    const BoundValue small = eta_bound(two, 6, 1);
    CHECK(small.direction == Direction::Upper);
    CHECK(safe_and_close(small, Dec(4) / 27, Dec("1e-38")));
    CHECK_THROWS_AS(eta_bound_exact(two, 20, 1), Error);
    CHECK_THROWS_AS(eta_bound_exact(two, 24, 0), Error);
}

TEST_CASE("lower-bound formula") {
    const GroupCtx two(2);
    const BoundValue v24 = lower_bound_formula(two, 24);
    CHECK(v24.direction == Direction::Lower);
    CHECK(safe_and_close(v24, Dec("6.75"), Dec("1e-38")));
    CHECK_FALSE(v24.vacuous);
    CHECK(lower_bound_formula(two, 7).decimal == lower_bound_formula(two, 6).decimal);
    CHECK(lower_bound_formula(two, 6).vacuous);
    CHECK_THROWS_AS(lower_bound_formula(two, 5), Error);

    // Independent double-precision evaluation of the same display.
    for (int d = 6; d <= 200; d += 2) {
        const double q = 3.0;
        const double expo = d / 3.0 - 4.0 / 3.0 * std::log(d / 3.0) / std::log(q) - 5.0;
        const double ref = 4.0 * std::pow(q, expo);
        CHECK(lower_bound_formula(two, d).value == doctest::Approx(ref).epsilon(1e-9));
    }

    // Non-decreasing from the point where the d/3 term dominates.
    double prev = 0.0;
    int drops_after = 0;
    for (int d = 6; d <= 600; ++d) {
        const double v = lower_bound_formula(two, d).value;
        if (v < prev) drops_after = d;
        prev = v;
    }
    CHECK(drops_after <= 12);
}

TEST_CASE("mirror size") {
    CHECK(mirror_size(GroupCtx(2), 4) == 4);
    CHECK(mirror_size(GroupCtx(2), 8) == 12);
    CHECK(mirror_size(GroupCtx(3), 8) == 30);
    CHECK(mirror_size(GroupCtx(2), 12) == BigInt(mirror(GroupCtx(2), 12).size()));
    CHECK_THROWS_AS(mirror_size(GroupCtx(2), 6), Error);
}

TEST_CASE("bounds report") {
    const auto r2 = bounds_report(GroupCtx(2), 2);
    CHECK(r2.elementary == 4);
    CHECK(r2.subset_max == 5);
    CHECK_FALSE(r2.eta.has_value());

    const auto r0 = bounds_report(GroupCtx(2), 0);
    CHECK(r0.ball == 1);
    CHECK(r0.elementary == 1);
    CHECK_FALSE(r0.thm_upper.has_value());

    const auto r24 = bounds_report(GroupCtx(2), 24);
    REQUIRE(r24.gamma.has_value());
    CHECK(*r24.gamma == 1);
    REQUIRE(r24.eta.has_value());
    CHECK(r24.eta->decimal == "756");
    const auto j = to_json(r24);
    CHECK(j["eta"]["value"].get<double>() == 756.0);
    CHECK(j["eta"]["direction"] == "upper");
    CHECK(j["lower_formula"]["direction"] == "lower");
    CHECK(j["thm_upper"].contains("rounding"));
    CHECK(j["mirror_size"]["value"] == 972);

    CHECK(big_to_json(BigInt(5)) == 5);
    CHECK(big_to_json(BigInt(1) << 80) == "1208925819614629174706176");
}

TEST_CASE("bounds are mutually consistent") {
    for (int n = 2; n <= 5; ++n) {
        const GroupCtx ctx(n);
        for (int d = 2; d <= 60; d += 2) {
            const auto r = bounds_report(ctx, d);
            CHECK(r.elementary >= 1);
            CHECK(r.subset_max >= 1);
            if (r.mirror_size) {
                CHECK(*r.mirror_size <= r.elementary);
                CHECK(Dec(r.mirror_size->str()) <= Dec(r.thm_upper->decimal));
            }
            if (r.lower_formula && !r.lower_formula->vacuous) {
                CHECK(Dec(r.lower_formula->decimal) <= Dec(r.thm_upper->decimal));
            }
        }
    }
}
