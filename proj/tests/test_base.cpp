#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "base/abgroup.hpp"
#include "base/interval.hpp"
#include "base/ints.hpp"
#include "base/matz.hpp"
#include "base/modpoly.hpp"
#include "base/polyz.hpp"
#include "base/util.hpp"

using namespace ct2;

TEST_CASE("integer primitives") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(97)));
    CHECK(!is_prime(Int(1)));
    CHECK(!is_prime(Int(1728)));
    auto f = factorize(Int(1728));
    CHECK(f.size() == 2);
    CHECK(f[Int(2)] == 6);
    CHECK(f[Int(3)] == 3);
    CHECK(omega(Int(1728)) == 2);
    CHECK(omega(Int(-20)) == 2);
    CHECK(valuation(Int(108), Int(2)) == 2);
    CHECK(valuation(Int(108), Int(3)) == 3);
    CHECK(is_perfect_square(Int(144)));
    CHECK(!is_perfect_square(Int(145)));

    // rho on a semiprime with both factors > trial bound
    Int a("1000003"), b("1000033");
    auto g = factorize(a * b);
    CHECK(g.size() == 2);
    CHECK(g[a] == 1);
    CHECK(g[b] == 1);

    // sqrtmod
    for (long p : {3L, 5L, 7L, 11L, 13L, 10007L}) {
        Int pp(p);
        for (long x = 1; x < std::min(p, 25L); ++x) {
            Int sq = Int(x) * x % pp;
            Int r = sqrtmod(sq, pp);
            CHECK(r * r % pp == sq);
        }
    }
}

TEST_CASE("polynomials: arithmetic, resultant, discriminant") {
    ZPoly f = parse_poly("-1,-1,0,1"); // x^3 - x - 1
    CHECK(f.degree() == 3);
    CHECK(f.is_monic());
    CHECK(discriminant(f) == Int(-23));

    ZPoly g = parse_poly("-2,0,0,1"); // x^3 - 2
    CHECK(discriminant(g) == Int(-108));

    ZPoly q = parse_poly("1,0,1"); // x^2 + 1
    CHECK(discriminant(q) == Int(-4));

    // resultant of (x-2)(x-3) and (x-2) is 0
    ZPoly p1 = parse_poly("6,-5,1");
    ZPoly p2 = parse_poly("-2,1");
    CHECK(resultant(p1, p2) == Int(0));
    // Res(x^2+1, x^2-2) = (i^2-2)((-i)^2-2) = 9
    CHECK(resultant(parse_poly("1,0,1"), parse_poly("-2,0,1")) == Int(9));

    // random multiplicativity of resultant in second argument
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        auto rnd = [&](int deg) {
            std::vector<Int> c(static_cast<size_t>(deg) + 1);
            for (auto& x : c) x = Int(static_cast<long>(rng() % 11) - 5);
            c.back() = Int(static_cast<long>(rng() % 4) + 1);
            return ZPoly(c);
        };
        ZPoly a = rnd(3), b = rnd(2), c = rnd(2);
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }

    // gcd / squarefree part
    ZPoly s = parse_poly("-1,1");       // x - 1
    ZPoly t = parse_poly("1,1");        // x + 1
    ZPoly prod = s * s * t;
    CHECK(gcd(prod, derivative(prod)).degree() == 1);
    CHECK(squarefree_part(prod) == s * t);

    ZPoly sq = s * s * t * t;
    ZPoly root;
    Rat k;
    CHECK(square_decompose(sq, root, k));
    CHECK(root == s * t);
    CHECK(k == 1);
    CHECK(!square_decompose(prod, root, k));

    // shift and reflect
    ZPoly sh = shift(parse_poly("0,0,1"), Int(1)); // (x+1)^2
    CHECK(sh == parse_poly("1,2,1"));
    CHECK(reflect(parse_poly("1,2,3")) == parse_poly("1,-2,3"));

    auto roots = integer_roots(parse_poly("6,-5,1")); // x^2-5x+6 wrong order: c0=6,c1=-5,c2=1
    CHECK(roots == std::vector<Int>{Int(2), Int(3)});
}

TEST_CASE("matrices: HNF, SNF, kernel, solve") {
    // HNF of [[2,0],[1,1]] has det 2
    ZMat A(2, 2);
    A.at(0, 0) = 2;
    A.at(1, 0) = 1;
    A.at(1, 1) = 1;
    ZMat U;
    ZMat H = hnf(A, &U);
    CHECK(H.rows == 2);
    CHECK(det(H) * 1 == abs(det(A)));
    CHECK(det(U) * det(A) == det(H));

    // SNF of diag(2,6)-like relation matrix
    ZMat B(2, 2);
    B.at(0, 0) = 2;
    B.at(1, 1) = 6;
    auto d = snf(B);
    CHECK(d == std::vector<Int>{Int(2), Int(6)});
    ZMat C(2, 2);
    C.at(0, 0) = 4;
    C.at(0, 1) = 2;
    C.at(1, 0) = 2;
    C.at(1, 1) = 4;
    auto d2 = snf(C);
    CHECK(d2 == std::vector<Int>{Int(2), Int(6)});

    // SNF transforms: U*A*V = D
    ZMat UU, VV;
    auto d3 = snf(C, &UU, &VV);
    ZMat D = UU * C * VV;
    CHECK(D.at(0, 0) == d3[0]);
    CHECK(D.at(1, 1) == d3[1]);
    CHECK(D.at(0, 1) == 0);
    CHECK(D.at(1, 0) == 0);

    // left kernel of [[1,2],[2,4]] is spanned by (2,-1)
    ZMat K(2, 2);
    K.at(0, 0) = 1;
    K.at(0, 1) = 2;
    K.at(1, 0) = 2;
    K.at(1, 1) = 4;
    ZMat ker = left_kernel(K);
    CHECK(ker.rows == 1);
    CHECK(ker.at(0, 0) * 1 + ker.at(0, 1) * 2 == 0);

    // solve_left
    std::vector<Int> b{Int(3), Int(6)};
    auto sol = solve_left(K, b);
    REQUIRE(sol.has_value());
    auto chk = *sol * K;
    CHECK(chk == b);
    std::vector<Int> b2{Int(1), Int(1)};
    CHECK(!solve_left(K, b2).has_value());

    // rational inverse
    QMat Q(2, 2);
    Q.at(0, 0) = Rat(1, 2);
    Q.at(0, 1) = 1;
    Q.at(1, 1) = 2;
    QMat Qi = inverse(Q);
    QMat Id = Q * Qi;
    CHECK(Id.at(0, 0) == 1);
    CHECK(Id.at(0, 1) == 0);
    CHECK(Id.at(1, 0) == 0);
    CHECK(Id.at(1, 1) == 1);
    CHECK(det(Q) == 1);
}

TEST_CASE("mod-p polynomial factorization") {
    Int p(5);
    // x^3 - 2 mod 5 = (x - 3)(x^2 + 3x + 4)
    FpPoly f = fp_reduce(parse_poly("-2,0,0,1"), p);
    auto fac = fp_factor(f, p);
    REQUIRE(fac.size() == 2);
    CHECK(fp_deg(fac[0].poly) == 1);
    CHECK(fp_deg(fac[1].poly) == 2);
    // check product
    FpPoly prod{Int(1)};
    for (auto& ff : fac)
        for (unsigned i = 0; i < ff.multiplicity; ++i) prod = fp_mul(prod, ff.poly, p);
    CHECK(fp_eq(prod, fp_monic(f, p)));

    // (x+1)^2 (x+2) mod 3
    Int q(3);
    ZPoly g = parse_poly("1,1") * parse_poly("1,1") * parse_poly("2,1");
    auto fac2 = fp_factor(fp_reduce(g, q), q);
    unsigned total = 0;
    for (auto& ff : fac2) total += ff.multiplicity * static_cast<unsigned>(fp_deg(ff.poly));
    CHECK(total == 3);
    bool saw_sq = false;
    for (auto& ff : fac2)
        if (ff.multiplicity == 2) saw_sq = true;
    CHECK(saw_sq);

    // x^2+5 mod 2 = (x+1)^2
    auto fac3 = fp_factor(fp_reduce(parse_poly("5,0,1"), Int(2)), Int(2));
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].multiplicity == 2);

    // irreducibility
    CHECK(fp_is_irreducible(fp_reduce(parse_poly("1,1,1"), Int(2)), Int(2)));   // x^2+x+1 mod 2
    CHECK(!fp_is_irreducible(fp_reduce(parse_poly("1,0,1"), Int(2)), Int(2))); // x^2+1 = (x+1)^2 mod 2
    CHECK(fp_is_irreducible(fp_reduce(parse_poly("-2,0,0,1"), Int(7)), Int(7)));

    // roots
    auto r = fp_roots(fp_reduce(parse_poly("-1,0,1"), Int(7)), Int(7)); // x^2-1 mod 7
    CHECK(r == std::vector<Int>{Int(1), Int(6)});

    // big-p factorization: x^2 - a with a QR mod large prime
    Int bigp("1000000007");
    Int a = Int(1234) * 1234 % bigp;
    auto fac4 = fp_factor(fp_reduce(ZPoly{{-a, Int(0), Int(1)}}, bigp), bigp);
    CHECK(fac4.size() == 2);

    // F_p linear algebra: note (2,4,1) = 2*(1,2,3) mod 5, so use p=7 for rank 2.
    FpMat M(2, 3, Int(7));
    M.at(0, 0) = 1;
    M.at(0, 1) = 2;
    M.at(0, 2) = 3;
    M.at(1, 0) = 2;
    M.at(1, 1) = 4;
    M.at(1, 2) = 1;
    FpMat Mc = M;
    CHECK(fp_rref(Mc) == 2);
    FpMat W(3, 2, Int(7));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j) W.at(i, j) = M.at(j, i);
    FpMat ker = fp_left_kernel(W);
    CHECK(ker.rows == 1);
    // verify kernel row * W = 0
    FpMat kr(1, 3, Int(7));
    for (size_t j = 0; j < 3; ++j) kr.at(0, j) = ker.at(0, j);
    FpMat z = fp_mul(kr, W);
    CHECK(z.at(0, 0) == 0);
    CHECK(z.at(0, 1) == 0);
}

TEST_CASE("intervals") {
    RIval a = RIval::from_rat(Rat(1, 3), 64);
    RIval b = RIval::from_rat(Rat(2, 3), 64);
    RIval c = a + b;
    CHECK(c.contains(Rat(1)));
    CHECK(c.rad_d() < 1e-15);
    RIval d = a * b - b * a;
    CHECK(d.contains_zero());
    RIval s = RIval::from_long(2, 64).sqrt();
    CHECK(s.sq().contains(Rat(2)));
    CHECK(RIval::from_long(3, 64).certainly_lt(RIval::from_long(4, 64)));
    CHECK(!RIval::from_long(3, 64).certainly_lt(RIval::from_long(3, 64)));
    CHECK(RIval::from_long(3, 64).certainly_le(RIval::from_long(3, 64)));

    CIval z{RIval::from_long(3, 64), RIval::from_long(4, 64)};
    CHECK(z.abs().contains(Rat(5)));

    // interval det of [[1,2],[3,4]] = -2
    std::vector<std::vector<RIval>> m{
        {RIval::from_long(1, 64), RIval::from_long(2, 64)},
        {RIval::from_long(3, 64), RIval::from_long(4, 64)},
    };
    CHECK(ival_det(m).contains(Rat(-2)));
}

TEST_CASE("abelian group structure from black box") {
    // Z/6 x Z/2 as strings "a,b"
    auto compose = [](const std::string& x, const std::string& y) {
        auto px = split(x, ','), py = split(y, ',');
        long a = (std::stol(px[0]) + std::stol(py[0])) % 6;
        long b = (std::stol(px[1]) + std::stol(py[1])) % 2;
        return std::to_string(a) + "," + std::to_string(b);
    };
    auto st = abgroup_structure("0,0", {"1,0", "0,1"}, compose);
    CHECK(st.order == 12);
    CHECK(st.divisors == std::vector<Int>{Int(2), Int(6)});
    CHECK(st.torsion_count(Int(2)) == 4);
    CHECK(st.torsion_count(Int(3)) == 3);
    CHECK(st.rank2() == 2);

    auto tor = torsion_exponents(st.divisors, Int(2));
    CHECK(tor.size() == 4);

    // trivial group
    auto triv = abgroup_structure("e", {}, [](const std::string&, const std::string&) { return std::string("e"); });
    CHECK(triv.order == 1);
    CHECK(triv.divisors.empty());
}

TEST_CASE("util: config, formatting, files") {
    auto cfg = parse_config_text("a = 1\n# comment\nb=two\n  c = 3 # tail\n");
    CHECK(cfg["a"] == "1");
    CHECK(cfg["b"] == "two");
    CHECK(cfg["c"] == "3");
    // round trip
    auto cfg2 = parse_config_text(render_config_text(cfg));
    CHECK(cfg == cfg2);

    CHECK(fmt_g12(0.5) == "0.5");
    CHECK(fnv128_hex("abc") != fnv128_hex("abd"));
    CHECK(fnv128_hex("abc").size() == 32);
}
