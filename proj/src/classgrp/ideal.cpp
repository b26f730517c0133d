#include "classgrp/ideal.hpp"

#include <algorithm>

#include "base/error.hpp"
#include "lattice/lattice.hpp"

namespace ct2 {

FracIdeal ideal_canonical(const NumberField& K, ZMat rows, Int den) {
    check(den != 0, errc::internal, "ideal: zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& x : rows.a) x = -x;
    }
    ZMat H = hnf(rows);
    check(H.rows == static_cast<size_t>(K.degree()), errc::internal, "ideal: not full rank");
    FracIdeal I{H, den};
    // strip common content
    Int g = I.den;
    for (const auto& x : I.num.a) g = gcd(g, x);
    if (g > 1) {
        for (auto& x : I.num.a) x = divexact(x, g);
        I.den = divexact(I.den, g);
        I.num = hnf(I.num); // pivots already positive; re-normalize for safety
    }
    return I;
}

FracIdeal ideal_one(const NumberField& K) {
    return FracIdeal{ZMat::identity(static_cast<size_t>(K.degree())), Int(1)};
}

FracIdeal ideal_from_elem(const NumberField& K, const Elem& a) {
    check(!K.is_zero(a), errc::internal, "ideal of zero element");
    size_t n = static_cast<size_t>(K.degree());
    ZMat rows(n, n);
    ZMat M = K.mult_matrix(a);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rows.at(i, j) = M.at(i, j);
    return ideal_canonical(K, std::move(rows), Int(1));
}

FracIdeal ideal_from_gens(const NumberField& K, const std::vector<Elem>& gens) {
    size_t n = static_cast<size_t>(K.degree());
    check(!gens.empty(), errc::internal, "ideal_from_gens: empty");
    ZMat rows(gens.size() * n, n);
    for (size_t g = 0; g < gens.size(); ++g) {
        ZMat M = K.mult_matrix(gens[g]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) rows.at(g * n + i, j) = M.at(i, j);
    }
    return ideal_canonical(K, std::move(rows), Int(1));
}

FracIdeal ideal_from_int(const NumberField& K, const Int& a) {
    return ideal_from_elem(K, K.from_int(a));
}

FracIdeal ideal_mul(const NumberField& K, const FracIdeal& I, const FracIdeal& J) {
    size_t n = static_cast<size_t>(K.degree());
    ZMat rows(n * n, n);
    for (size_t i = 0; i < n; ++i) {
        Elem bi(n);
        for (size_t t = 0; t < n; ++t) bi[t] = I.num.at(i, t);
        for (size_t j = 0; j < n; ++j) {
            Elem bj(n);
            for (size_t t = 0; t < n; ++t) bj[t] = J.num.at(j, t);
            Elem prod = K.mul(bi, bj);
            for (size_t t = 0; t < n; ++t) rows.at(i * n + j, t) = prod[t];
        }
    }
    return ideal_canonical(K, std::move(rows), I.den * J.den);
}

FracIdeal ideal_mul_elem(const NumberField& K, const FracIdeal& I, const Elem& a, const Int& aden) {
    size_t n = static_cast<size_t>(K.degree());
    ZMat rows(n, n);
    for (size_t i = 0; i < n; ++i) {
        Elem bi(n);
        for (size_t t = 0; t < n; ++t) bi[t] = I.num.at(i, t);
        Elem prod = K.mul(bi, a);
        for (size_t t = 0; t < n; ++t) rows.at(i, t) = prod[t];
    }
    return ideal_canonical(K, std::move(rows), I.den * aden);
}

FracIdeal ideal_inv(const NumberField& K, const FracIdeal& I) {
    // I = N/d with N integral; I^{-1} = d * N^{-1};
    // N^{-1} = (1/NN) {z : z*M_{g_j} = 0 mod NN for all j}, NN = |det num|.
    size_t n = static_cast<size_t>(K.degree());
    Int NN = abs(det(I.num));
    check(NN != 0, errc::internal, "ideal_inv: degenerate");
    // stack conditions: z * A = 0 mod NN with A = [M_g1 | ... | M_gn]
    ZMat A(n, n * n);
    for (size_t j = 0; j < n; ++j) {
        Elem gj(n);
        for (size_t t = 0; t < n; ++t) gj[t] = I.num.at(j, t);
        ZMat M = K.mult_matrix(gj);
        for (size_t i = 0; i < n; ++i)
            for (size_t t = 0; t < n; ++t) A.at(i, j * n + t) = M.at(i, t);
    }
    // kernel of [A; NN*Id] over Z, projected to the first n coordinates:
    ZMat stacked(n + n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n * n; ++j) stacked.at(i, j) = A.at(i, j);
    for (size_t i = 0; i < n * n; ++i) stacked.at(n + i, i) = NN;
    ZMat ker = left_kernel(stacked);
    ZMat sol(ker.rows, n);
    for (size_t i = 0; i < ker.rows; ++i)
        for (size_t j = 0; j < n; ++j) sol.at(i, j) = ker.at(i, j) * I.den;
    // I^{-1} = (d/NN) * span(ker-part)
    return ideal_canonical(K, std::move(sol), NN);
}

FracIdeal ideal_pow(const NumberField& K, const FracIdeal& I, long e) {
    if (e == 0) return ideal_one(K);
    FracIdeal base = e > 0 ? I : ideal_inv(K, I);
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    FracIdeal acc = ideal_one(K);
    while (k > 0) {
        if (k & 1) acc = ideal_mul(K, acc, base);
        base = ideal_mul(K, base, base);
        k >>= 1;
    }
    return acc;
}

Rat ideal_norm(const NumberField& K, const FracIdeal& I) {
    Rat r = Rat(abs(det(I.num))) / Rat(pow_ui(I.den, static_cast<unsigned long>(K.degree())));
    r.canonicalize();
    return r;
}

bool ideal_contains(const NumberField& K, const FracIdeal& I, const Elem& x) {
    std::vector<Int> v(x.begin(), x.end());
    for (auto& c : v) c *= I.den;
    (void)K;
    return solve_left(I.num, v).has_value();
}

std::vector<Elem> ideal_basis_elems(const NumberField& K, const FracIdeal& I) {
    size_t n = static_cast<size_t>(K.degree());
    std::vector<Elem> out;
    for (size_t i = 0; i < n; ++i) {
        Elem e(n);
        for (size_t t = 0; t < n; ++t) e[t] = I.num.at(i, t);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Elem> ideal_short_elems(const NumberField& K, const FracIdeal& I, long bits) {
    check(I.is_integral(), errc::internal, "ideal_short_elems: fractional input");
    auto gens = ideal_basis_elems(K, I);
    auto red = lll_reduce_elems(K, gens, Int(1), bits);
    std::sort(red.begin(), red.end(), [&](const Elem& a, const Elem& b) {
        int c = K.compare_length2(a, b);
        if (c != 0) return c < 0;
        return a < b;
    });
    return red;
}

FracIdeal ideal_class_canonical_rep(const NumberField& K, const FracIdeal& I) {
    FracIdeal inv = ideal_inv(K, I);
    // shortest vector of inv (as a lattice with denominator): enumerate via LLL
    auto gens = ideal_basis_elems(K, inv);
    long bits = 128;
    auto red = lll_reduce_elems(K, gens, inv.den, bits);
    // candidates: LLL rows and small combinations; pick certified shortest, lex tie
    std::vector<Elem> cands;
    size_t n = red.size();
    for (size_t i = 0; i < n; ++i) cands.push_back(red[i]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            cands.push_back(K.add(red[i], red[j]));
            cands.push_back(K.sub(red[i], red[j]));
        }
    // enumeration below the shortest LLL row for exactness; on a budget blow
    // the LLL candidates alone are used (still deterministic)
    try {
        std::vector<std::vector<RIval>> rows;
        for (const auto& g : red) rows.push_back(embedding_row(K, g, inv.den, bits));
        RIval bound2 = K.length2(red[0], bits);
        for (const auto& g : red) bound2 = bound2.min(K.length2(g, bits));
        // scale: lengths of red are over denominator inv.den
        bound2 = bound2 / RIval::from_int(inv.den * inv.den, 192);
        bound2 = bound2 * RIval::from_rat(Rat(1048577, 1048576), 192);
        auto coords = enumerate_quadratic(rows, bound2, 200'000);
        for (const auto& c : coords) {
            Elem x = K.zero();
            for (size_t j = 0; j < n; ++j)
                if (c[j] != 0) x = K.add(x, K.mul_int(red[j], c[j]));
            cands.push_back(std::move(x));
        }
    } catch (const ct2_error& e) {
        if (e.code() != errc::budget_exceeded) throw;
    }
    // canonical sign + dedupe, certified sort
    for (auto& c : cands) {
        for (size_t t = 0; t < c.size(); ++t) {
            if (c[t] > 0) break;
            if (c[t] < 0) {
                c = K.neg(c);
                break;
            }
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    cands.erase(std::remove_if(cands.begin(), cands.end(), [&](const Elem& e) { return K.is_zero(e); }),
                cands.end());
    check(!cands.empty(), errc::internal, "canonical rep: no candidates");
    Elem best = cands[0];
    for (size_t i = 1; i < cands.size(); ++i) {
        int c = K.compare_length2(cands[i], best);
        if (c < 0 || (c == 0 && cands[i] < best)) best = cands[i];
    }
    // J = best/den * I, integral
    FracIdeal J = ideal_mul_elem(K, I, best, inv.den);
    check(J.is_integral(), errc::internal, "canonical rep not integral");
    return J;
}

} // namespace ct2
