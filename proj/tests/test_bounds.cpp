#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "base/error.hpp"
#include "bounds/bounds.hpp"
#include "classgrp/classgroup.hpp"

using namespace ct2;

namespace {
// truncated (not rounded) leading digits, as reports print them
std::string trunc_digits(double v, int digits) {
    double scale = std::pow(10.0, digits);
    double t = std::floor(v * scale) / scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, t);
    return buf;
}
} // namespace

TEST_CASE("constants match the printed truncations") {
    auto beta = hv_beta(128);
    CHECK(beta.rad_d() < 1e-30);
    CHECK(trunc_digits(beta.mid_d(), 4) == "0.2782");
    // true value 0.2782386677...
    CHECK(beta.mid_d() == doctest::Approx(0.278238667707892).epsilon(1e-12));

    auto x = h2_exponent_cubic(128);
    CHECK(trunc_digits(x.mid_d(), 4) == "0.2784");
    CHECK(x.mid_d() == doctest::Approx(0.278433742656222).epsilon(1e-12));

    auto t = derived_exponents(128);
    CHECK(trunc_digits(t.beta_hv, 4) == "0.2782");
    CHECK(trunc_digits(t.h2_exp_cubic, 4) == "0.2784");
    CHECK(trunc_digits(t.points_exp, 4) == "0.1117");
    CHECK(trunc_digits(t.a4_exp, 4) == "0.7784");
    CHECK(t.points_exp == doctest::Approx(0.111767075989555).epsilon(1e-12));
    CHECK(t.a4_exp == doctest::Approx(0.778433742656222).epsilon(1e-12));
    CHECK(t.fixed_point_residual < 1e-12);

    // independent re-evaluation at doubled precision agrees to 1e-12
    auto beta2 = hv_beta(256);
    CHECK(std::fabs(beta.mid_d() - beta2.mid_d()) < 1e-12);
    auto x2 = h2_exponent_cubic(256);
    CHECK(std::fabs(x.mid_d() - x2.mid_d()) < 1e-12);

    // delta_n table
    CHECK(t.h2_exp(5) == doctest::Approx(0.4));
    CHECK(t.delta_n(5) == doctest::Approx(0.1));
    CHECK(t.h2_exp(3) == doctest::Approx(t.h2_exp_cubic));
    CHECK(t.h2_exp(2) == 0.0);

    // with no feedback the exponent would be 1/6; the fixed point exceeds it
    CHECK(1.0 / 6.0 < t.h2_exp_cubic);
}

TEST_CASE("Brumer-Kramer bound: y^2 = x^3 - 2 gives 6") {
    ZPoly f = parse_poly("-2,0,0,1");
    NumberField K(f);
    ClassGroup cg(K);
    CHECK(cg.rank2() == 0); // h2(Q(cbrt2)) = 1
    auto in = bk_input(f, cg.rank2());
    CHECK(in.disc_E == -1728);
    CHECK(in.omega_disc == 2);
    CHECK(bk_rank_bound(in) == 6);

    // hypothetical rk2 = 0, omega = 1 -> 4
    BKInput h;
    h.rk2_cl = 0;
    h.omega_disc = 1;
    CHECK(bk_rank_bound(h) == 4);

    // reducible cubic rejected
    CHECK_THROWS_AS(bk_input(parse_poly("0,-1,0,1"), 0), ct2_error);

    // monotonicity in each argument
    for (unsigned rk = 0; rk < 4; ++rk)
        for (unsigned om = 1; om < 5; ++om) {
            BKInput a;
            a.rk2_cl = rk;
            a.omega_disc = om;
            BKInput b1 = a;
            b1.rk2_cl = rk + 1;
            BKInput b2 = a;
            b2.omega_disc = om + 1;
            CHECK(bk_rank_bound(b1) > bk_rank_bound(a));
            CHECK(bk_rank_bound(b2) > bk_rank_bound(a));
        }
}

TEST_CASE("HV point bound") {
    CHECK(hv_point_bound(0, Int(12345), 0.0) == doctest::Approx(1.0));
    // rank 10, eps 0: e^{10 beta} = e^{2.783}
    double v = hv_point_bound(10, Int(999), 0.0);
    CHECK(v == doctest::Approx(std::exp(10 * hv_beta(64).mid_d())).epsilon(1e-12));
    CHECK(v > 16.1);
    CHECK(v < 16.2);
    // monotone in rank
    for (long r = 0; r < 12; ++r) CHECK(hv_point_bound(r + 1, Int(77), 0.1) > hv_point_bound(r, Int(77), 0.1));
}

TEST_CASE("Baily sum") {
    CHECK(baily_sum({}, 100.0) == 0.0);
    // single row disc = e^2, h2 = 1, X = e^4 -> 1 * 4 * e
    double e2 = std::exp(2.0);
    std::vector<BailyRow> t{{Int(static_cast<long>(0)), Int(1)}};
    t[0].disc = Int(7); // placeholder; compute with an exact-disc row below
    // use disc = 7 and verify against a direct evaluation instead of e^2
    double direct = 1.0 * std::pow(std::log(7.0), 2) * std::sqrt(100.0 / 7.0);
    CHECK(baily_sum(t, 100.0) == doctest::Approx(direct).epsilon(1e-12));
    (void)e2;

    // additive over disjoint tables, monotone in X
    std::vector<BailyRow> t2{{Int(11), Int(2)}, {Int(-23), Int(1)}};
    double s1 = baily_sum({t2[0]}, 1000.0), s2 = baily_sum({t2[1]}, 1000.0);
    CHECK(baily_sum(t2, 1000.0) == doctest::Approx(s1 + s2).epsilon(1e-12));
    CHECK(baily_sum(t2, 2000.0) > baily_sum(t2, 1000.0));

    // bad rows
    CHECK_THROWS_AS(baily_sum({{Int(0), Int(1)}}, 10.0), ct2_error);
    CHECK_THROWS_AS(baily_sum({{Int(100), Int(1)}}, 10.0), ct2_error);

    // parser
    auto rows = parse_cubic_table("# comment\n-23,1\n49,2  # tail\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].disc == -23);
    CHECK(rows[1].h2 == 2);
    CHECK_THROWS_AS(parse_cubic_table("nonsense"), ct2_error);
}
