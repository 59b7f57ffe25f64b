#include <doctest.h>

#include <cmath>

#include "lrclab/bounds.hpp"
#include "lrclab/presets.hpp"

using namespace lrclab;

TEST_SUITE("bounds") {

TEST_CASE("rational arithmetic") {
    Rat a{19, 56}, b{7, 8};
    CHECK((b * a) == Rat{19, 64});
    CHECK((Rat{25, 64} + Rat{19, 64}) == Rat{44, 64});
    CHECK(Rat{44, 64} > Rat{42, 64});
    CHECK(Rat{-2, -4} == Rat{1, 2});
    CHECK(Rat{6, 4}.str() == "3/2");
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("rate points of the small presets") {
    auto p44 = rate_point(build_preset("f8-prop44"));
    CHECK(p44.delta() == Rat{1, 6});
    CHECK(p44.rate() == Rat{5, 12});
    CHECK(p44.r_over_n() == Rat{1, 24});

    auto a = rate_point(build_preset("f4-rem42a"));
    CHECK(a.delta() == Rat{1, 4});
    CHECK(a.rate() == Rat{1, 2});
    CHECK(a.r_over_n() == Rat{1, 8});
}

TEST_CASE("thm36 point from the closed-form parameters") {
    auto rows = table1_points(8);
    const RatePoint& p = rows[1];
    CHECK(p.label == "gs-thm36-q8");
    CHECK(p.delta() == Rat{11, 56});
    CHECK(p.rate() == Rat{33, 64});
    CHECK(p.r_over_n() == Rat{1, 512});
}

TEST_CASE("btv threshold values") {
    CHECK(btv_threshold(7, 8, 1.0) == 0.0);  // clamped
    CHECK(btv_threshold(7, 8, 0.0) == doctest::Approx(7.0 / 12.0));
    CHECK(btv_threshold(31, 32, 0.5) == doctest::Approx((31.0 / 32.0) * (0.5 - 3.0 / 33.0)));
    CHECK_THROWS_AS(btv_threshold(0, 8, 0.5), UsageError);
}

TEST_CASE("paper inequality, exact rationals") {
    auto rows = table1_points(8);
    // thm34: R + (7/8) delta = 25/64 + 19/64 = 44/64 > 42/64
    CHECK(rows[0].rate() + Rat{7, 8} * rows[0].delta() == Rat{44, 64});
    CHECK(paper_inequality_exact(rows[0], 8));
    // thm36: 33/64 + 11/64 = 44/64 > 42/64
    CHECK(rows[1].rate() + Rat{7, 8} * rows[1].delta() == Rat{44, 64});
    CHECK(paper_inequality_exact(rows[1], 8));
    CHECK(paper_threshold(7, 8, 1.0) == 0.0);
}

TEST_CASE("the cor38 sweep satisfies the improved inequality for the full range") {
    for (uint32_t q : {8u, 32u}) {
        auto pts = cor38_points(q, 1, (q - 1) * (q - 2));
        for (const auto& p : pts) {
            CHECK(paper_inequality_exact(p, q));
            // the combination R + ((q-1)/q) delta is constant along the sweep
            Rat lhs = p.rate() + Rat{q - 1, q} * p.delta();
            Rat expect{static_cast<long long>(uint64_t{q} * q - 3 * q + 4),
                       static_cast<long long>(uint64_t{q} * q)};
            CHECK(lhs == expect);
        }
    }
    CHECK_THROWS_AS(cor38_points(8, 1, 43), UsageError);
}

TEST_CASE("gv threshold matches an independent reference") {
    // mpmath, 2e5-point grid + golden section to 1e-15
    auto r1 = gv_threshold(31, 32, 0.5);
    CHECK(r1.R == doctest::Approx(0.304580368939).epsilon(1e-6));
    auto r2 = gv_threshold(7, 8, 0.25);
    CHECK(r2.R == doctest::Approx(0.479907251856).epsilon(1e-6));
}

TEST_CASE("gv threshold is stable under 10x grid refinement") {
    for (double delta : {0.1, 0.25, 0.5, 0.9}) {
        auto coarse = gv_threshold(31, 32, delta, 1e-9, 10000);
        auto fine = gv_threshold(31, 32, delta, 1e-9, 100000);
        CHECK(std::abs(coarse.R - fine.R) < 1e-6);
    }
}

TEST_CASE("gv endpoint algebra: b2(1) = q^r makes the s=1 value r/(r+1)") {
    const uint32_t r = 7, q = 8;
    double b2_at_1 = (std::pow(1.0 + (q - 1.0), r + 1.0)) / q;
    CHECK(b2_at_1 == doctest::Approx(std::pow(double(q), double(r))));
    // so the minimand at s=1 is exactly r/(r+1) and the bound there is 0
    double minimand = std::log(b2_at_1) / ((r + 1.0) * std::log(double(q)));
    CHECK(minimand == doctest::Approx(double(r) / (r + 1)));
}

TEST_CASE("gv input validation and boundary flag") {
    CHECK_THROWS_AS(gv_threshold(7, 8, 0.0), UsageError);
    CHECK_THROWS_AS(gv_threshold(7, 8, 1.0), UsageError);
    auto tiny = gv_threshold(7, 8, 1e-9);
    CHECK(tiny.boundary);  // minimizer pinned at the smallest grid point
    CHECK(tiny.R == doctest::Approx(7.0 / 8.0).epsilon(1e-3));
}

TEST_CASE("threshold curves are monotone non-increasing in delta") {
    for (double d = 0.0; d < 0.99; d += 0.01) {
        CHECK(btv_threshold(7, 8, d) >= btv_threshold(7, 8, d + 0.01));
        CHECK(paper_threshold(7, 8, d) >= paper_threshold(7, 8, d + 0.01));
    }
    for (double d = 0.01; d + 0.01 < 1.0; d += 0.01)
        CHECK(gv_threshold(7, 8, d).R >= gv_threshold(7, 8, d + 0.01).R - 1e-9);
}

TEST_CASE("compare_points marks the table rows") {
    auto rows = compare_points(table1_points(8), 8);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].paper_ok);
    CHECK(rows[1].paper_ok);
}

TEST_CASE("rate_point falls back to claims and flags upper bounds") {
    auto p45 = build_preset("f8-prop45");
    auto p = rate_point(p45);
    CHECK(p.d == 4);
    CHECK(p.d_is_upper_only);
}

}  // TEST_SUITE
