#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "base/error.hpp"
#include "lattice/lattice.hpp"

using namespace ct2;

namespace {
RIval ival_l(long v) { return RIval::from_long(v, 128); }
} // namespace

TEST_CASE("raw LLL transform") {
    // [[1,0],[100,1]] reduces to +-identity rows
    std::vector<std::vector<RIval>> rows{{ival_l(1), ival_l(0)}, {ival_l(100), ival_l(1)}};
    ZMat U = lll_transform(rows, 128);
    CHECK(abs(det(U)) == 1);
    // U * [[1,0],[100,1]]: rows should have length <= sqrt(2)
    long r0x = Int(U.at(0, 0) + 100 * U.at(0, 1)).get_si();
    long r0y = U.at(0, 1).get_si();
    long r1x = Int(U.at(1, 0) + 100 * U.at(1, 1)).get_si();
    long r1y = U.at(1, 1).get_si();
    CHECK(r0x * r0x + r0y * r0y <= 2);
    CHECK(r1x * r1x + r1y * r1y <= 2);

    // identity stays identity-normed
    std::vector<std::vector<RIval>> id{{ival_l(1), ival_l(0)}, {ival_l(0), ival_l(1)}};
    ZMat U2 = lll_transform(id, 128);
    CHECK(abs(det(U2)) == 1);
}

TEST_CASE("covolume identity") {
    // Q(i): covolume 1 = 2^-1 sqrt(4)
    NumberField gauss(parse_poly("1,0,1"));
    CHECK(covolume(gauss, 128).contains(Rat(1)));
    // Q(sqrt(-5)): covolume sqrt(5) = 2^-1 sqrt(20)
    NumberField k5(parse_poly("5,0,1"));
    CHECK(covolume(k5, 128).sq().contains(Rat(5)));
    // Q(cbrt 2): covolume = 2^-1 sqrt(108) -> squared = 27
    NumberField c2(parse_poly("-2,0,0,1"));
    CHECK(covolume(c2, 128).sq().contains(Rat(27)));
    // LLL product bound test from the lll_reduce contract:
    // product of reduced lengths within [covol, 2*covol] for this field
    long bits = 128;
    std::vector<Elem> basis;
    for (int i = 0; i < 3; ++i) {
        Elem e = c2.zero();
        e[static_cast<size_t>(i)] = 1;
        basis.push_back(e);
    }
    auto red = lll_reduce_elems(c2, basis, Int(1), bits);
    RIval prod = RIval::from_long(1, 192);
    for (auto& g : red) prod = prod * c2.length2(g, bits).sqrt();
    RIval cov = covolume(c2, bits);
    CHECK(!(prod.certainly_lt(cov)));
    CHECK(!( (cov * RIval::from_long(2, 192)).certainly_lt(prod) ));
}

TEST_CASE("minkowski_reduce: spec examples") {
    // Q(i) -> {1, i}, minima (1, 1)
    NumberField gauss(parse_poly("1,0,1"));
    auto rb = minkowski_reduce(gauss);
    REQUIRE(rb.vectors.size() == 2);
    CHECK(rb.vectors[0] == gauss.one());
    CHECK(rb.exact);
    CHECK(rb.lengths[0].contains(Rat(1)));
    CHECK(rb.lengths[1].contains(Rat(1)));
    // second vector is +-i + possibly integer shift of length 1: must be +-i
    Elem v1 = rb.vectors[1];
    CHECK(gauss.is_torsion_unit(v1));

    // Q(sqrt(-5)) -> {1, sqrt(-5)}, minima (1, sqrt 5)
    NumberField k5(parse_poly("5,0,1"));
    auto rb5 = minkowski_reduce(k5);
    CHECK(rb5.vectors[0] == k5.one());
    CHECK(rb5.lengths[1].sq().contains(Rat(5)));

    // Q(cbrt 2): product of |v_i| within factor 2 of sqrt(108)/2
    NumberField c2(parse_poly("-2,0,0,1"));
    auto rb2 = minkowski_reduce(c2);
    RIval prod = RIval::from_long(1, 192);
    for (size_t i = 1; i < rb2.vectors.size(); ++i) prod = prod * rb2.lengths[i];
    RIval cov = covolume(c2, 192); // sqrt(108)/2
    RIval lo = cov * RIval::from_rat(Rat(1, 2), 192);
    RIval hi = cov * RIval::from_long(2, 192);
    // |v_1| |v_2| should be around covolume (the spec reports the ratio);
    // assert a generous certified window [covol/2, 2 covol] holds
    CHECK(!prod.certainly_lt(lo));
    CHECK(!hi.certainly_lt(prod));
}

TEST_CASE("successive minima: spec examples") {
    NumberField gauss(parse_poly("1,0,1"));
    auto m = successive_minima(gauss);
    REQUIRE(m.lengths.size() == 2);
    CHECK(m.lengths[0].contains(Rat(1)));
    CHECK(m.lengths[1].contains(Rat(1)));

    NumberField k5(parse_poly("5,0,1"));
    auto m5 = successive_minima(k5);
    CHECK(m5.lengths[0].contains(Rat(1)));
    CHECK(m5.lengths[1].sq().contains(Rat(5)));

    // Minkowski second theorem two-sided bounds
    auto chk = minkowski_second_check(k5, m5);
    CHECK(chk.lower_ok);
    CHECK(chk.upper_ok);
    NumberField c23(parse_poly("-1,-1,0,1"));
    auto m23 = successive_minima(c23);
    auto chk23 = minkowski_second_check(c23, m23);
    CHECK(chk23.lower_ok);
    CHECK(chk23.upper_ok);
}

TEST_CASE("regularity report") {
    // Q(i): vacuous, nondegenerate = true
    NumberField gauss(parse_poly("1,0,1"));
    auto rep = regularity_report(gauss);
    CHECK(rep.matrix_A_nondegenerate);
    CHECK(rep.matrix_A.rows == 0);

    // Q(cbrt 2): A is 1x1 and nonzero
    NumberField c2(parse_poly("-2,0,0,1"));
    auto rep2 = regularity_report(c2);
    REQUIRE(rep2.matrix_A.rows == 1);
    CHECK(rep2.matrix_A.at(0, 0) != 0);
    CHECK(rep2.matrix_A_nondegenerate);
    REQUIRE(rep2.permutation.size() == 1);
    CHECK(rep2.permutation[0] == 0);

    // x^4 - x - 1 quartic: 2x2 matrix nondegenerate
    NumberField q(parse_poly("-1,-1,0,0,1"));
    auto rep4 = regularity_report(q);
    CHECK(rep4.matrix_A.rows == 2);
    CHECK(rep4.matrix_A_nondegenerate);
    CHECK(rep4.permutation.size() == 2);
}

TEST_CASE("enumerate_box: spec examples") {
    // Q(i) with bound 1.5 -> 9 points
    NumberField gauss(parse_poly("1,0,1"));
    auto pts = enumerate_box(gauss, BoxRadius{Rat(3, 2), 1});
    CHECK(pts.size() == 9);

    // Q(i), bound 1 -> {0, +-1, +-i} = 5 points (boundary inclusive)
    auto pts1 = enumerate_box(gauss, BoxRadius{Rat(1), 1});
    CHECK(pts1.size() == 5);

    // Q(sqrt(-5)), bound sqrt(20) -> 25 points
    NumberField k5(parse_poly("5,0,1"));
    auto pts5 = enumerate_box(k5, BoxRadius{Rat(20), 2});
    CHECK(pts5.size() == 25);

    // census radius for Q(i): |disc|^{1/2} = 2 -> 13 points
    auto ptsg = enumerate_box(gauss, BoxRadius{Rat(4), 2});
    CHECK(ptsg.size() == 13);

    // basis independence: counts match when enumerating with any basis
    // (enumerate_box uses an internal LLL basis; cross-check against a direct
    // filter over a larger box)
    int count = 0;
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
            Elem x = k5.add(k5.from_int(Int(a)), k5.mul_int(k5.theta(), Int(b)));
            if (box_contains(k5, x, BoxRadius{Rat(20), 2})) ++count;
        }
    CHECK(count == 25);

    // symmetry under negation
    for (const auto& p : pts5) {
        Elem np = k5.neg(p);
        CHECK(std::find(pts5.begin(), pts5.end(), np) != pts5.end());
    }
}
