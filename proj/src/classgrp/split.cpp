#include "classgrp/split.hpp"

#include <algorithm>

#include "base/error.hpp"
#include "base/modpoly.hpp"

namespace ct2 {

namespace {

// ---- F_p algebra A = O_K/pO_K machinery (used when p divides the index) ----

struct ModAlgebra {
    const NumberField* K;
    Int p;
    size_t n;

    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
        Elem prod = K->mul(Elem(a.begin(), a.end()), Elem(b.begin(), b.end()));
        std::vector<Int> r(n);
        for (size_t i = 0; i < n; ++i) r[i] = fdiv_r(prod[i], p);
        return r;
    }
    std::vector<Int> unit() const {
        std::vector<Int> e(n, Int(0));
        e[0] = 1;
        return e;
    }
};

// Subalgebra with a stored basis (rows over A) and its identity element.
struct Component {
    std::vector<std::vector<Int>> basis;
    std::vector<Int> identity;
};

// Solve x * rowspan-basis representation: express v in the row space of basis
// (mod p); returns coefficients if representable.
std::optional<std::vector<Int>> express_in_basis(const std::vector<std::vector<Int>>& basis,
                                                 const std::vector<Int>& v, const Int& p) {
    size_t k = basis.size(), n = v.size();
    FpMat M(k + 1, n, p);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) M.at(i, j) = basis[i][j];
    for (size_t j = 0; j < n; ++j) M.at(k, j) = fdiv_r(v[j], p);
    // row reduce tracking transform on the last row
    FpMat T(k + 1, k + 1, p);
    for (size_t i = 0; i <= k; ++i) T.at(i, i) = 1;
    size_t r = 0;
    for (size_t j = 0; j < n && r < k; ++j) {
        size_t piv = r;
        while (piv < k && M.at(piv, j) == 0) ++piv;
        if (piv >= k) continue;
        for (size_t t = 0; t < n; ++t) std::swap(M.at(piv, t), M.at(r, t));
        for (size_t t = 0; t <= k; ++t) std::swap(T.at(piv, t), T.at(r, t));
        Int inv = invmod(M.at(r, j), p);
        for (size_t t = 0; t < n; ++t) M.at(r, t) = M.at(r, t) * inv % p;
        for (size_t t = 0; t <= k; ++t) T.at(r, t) = T.at(r, t) * inv % p;
        for (size_t i = 0; i <= k; ++i) {
            if (i == r || M.at(i, j) == 0) continue;
            Int fmul = M.at(i, j);
            for (size_t t = 0; t < n; ++t) M.at(i, t) = fdiv_r(M.at(i, t) - fmul * M.at(r, t), p);
            for (size_t t = 0; t <= k; ++t) T.at(i, t) = fdiv_r(T.at(i, t) - fmul * T.at(r, t), p);
        }
        ++r;
    }
    for (size_t j = 0; j < n; ++j)
        if (M.at(k, j) != 0) return std::nullopt;
    // last row of T expresses 0 = sum T[k][i] row_i + T[k][k] v
    Int c = T.at(k, k);
    Int cinv = invmod(c, p);
    if (cinv == 0) return std::nullopt;
    std::vector<Int> out(k);
    for (size_t i = 0; i < k; ++i) out[i] = fdiv_r(-T.at(k, i) * cinv, p);
    return out;
}

std::vector<PrimeIdeal> split_prime_algebra(const NumberField& K, const Int& p) {
    size_t n = static_cast<size_t>(K.degree());
    ModAlgebra A{&K, p, n};
    // radical of A: kernel of x -> x^(p^e), p^e >= n
    Int q = p;
    while (q < Int(static_cast<long>(n))) q *= p;
    FpMat frob(n, n, p);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> base(n, Int(0)), acc = A.unit();
        base[i] = 1;
        Int e = q;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = A.mul(acc, base);
            base = A.mul(base, base);
            e >>= 1;
        }
        for (size_t t = 0; t < n; ++t) frob.at(i, t) = acc[t];
    }
    FpMat rad = fp_left_kernel(frob);
    // quotient A/R: reduce modulo the rref of rad
    FpMat radr = rad;
    std::vector<size_t> rad_piv;
    size_t rad_rank = fp_rref(radr, &rad_piv);
    auto reduce_mod_rad = [&](std::vector<Int> v) {
        for (size_t i = 0; i < rad_rank; ++i) {
            size_t pj = rad_piv[i];
            if (v[pj] == 0) continue;
            Int f = v[pj];
            for (size_t t = 0; t < n; ++t) v[t] = fdiv_r(v[t] - f * radr.at(i, t), p);
        }
        return v;
    };
    // basis of A/R lifted: standard vectors at non-pivot columns, reduced
    Component top;
    {
        std::vector<bool> isp(n, false);
        for (size_t i = 0; i < rad_rank; ++i) isp[rad_piv[i]] = true;
        for (size_t j = 0; j < n; ++j) {
            if (isp[j]) continue;
            std::vector<Int> e(n, Int(0));
            e[j] = 1;
            top.basis.push_back(e);
        }
        top.identity = reduce_mod_rad(A.unit());
    }
    std::vector<Component> fields;
    {
        // recursive splitter using rad-reduced multiplication
        std::function<std::vector<Int>(const std::vector<Int>&, const std::vector<Int>&)> mulr =
            [&](const std::vector<Int>& a, const std::vector<Int>& b) {
                return reduce_mod_rad(A.mul(a, b));
            };
        std::function<void(const Component&)> split_rec = [&](const Component& comp) {
            size_t k = comp.basis.size();
            FpMat FM(k, k, p);
            for (size_t i = 0; i < k; ++i) {
                std::vector<Int> base = comp.basis[i], acc = comp.identity;
                Int e = p;
                while (e > 0) {
                    if (mpz_odd_p(e.get_mpz_t())) acc = mulr(acc, base);
                    base = mulr(base, base);
                    e >>= 1;
                }
                auto coords = express_in_basis(comp.basis, acc, p);
                check(coords.has_value(), errc::internal, "split: frob image");
                for (size_t j = 0; j < k; ++j)
                    FM.at(i, j) = fdiv_r((*coords)[j] - (i == j ? Int(1) : Int(0)), p);
            }
            FpMat fix = fp_left_kernel(FM);
            check(fix.rows >= 1, errc::internal, "split: fixed space empty");
            if (fix.rows == 1) {
                fields.push_back(comp);
                return;
            }
            std::vector<Int> bvec;
            for (size_t i = 0; i < fix.rows && bvec.empty(); ++i) {
                std::vector<Int> cand(n, Int(0));
                for (size_t j = 0; j < k; ++j) {
                    if (fix.at(i, j) == 0) continue;
                    for (size_t t = 0; t < n; ++t)
                        cand[t] = fdiv_r(cand[t] + fix.at(i, j) * comp.basis[j][t], p);
                }
                FpMat two(2, n, p);
                for (size_t t = 0; t < n; ++t) {
                    two.at(0, t) = comp.identity[t];
                    two.at(1, t) = cand[t];
                }
                if (fp_rref(two) == 2) bvec = cand;
            }
            check(!bvec.empty(), errc::internal, "split: no separating element");
            // min poly of bvec
            std::vector<std::vector<Int>> powers{comp.identity};
            std::vector<Int> cur = comp.identity;
            FpPoly minpoly;
            for (size_t d = 1; d <= k + 1 && minpoly.empty(); ++d) {
                cur = mulr(cur, bvec);
                FpMat M(powers.size() + 1, n, p);
                for (size_t i = 0; i < powers.size(); ++i)
                    for (size_t t = 0; t < n; ++t) M.at(i, t) = powers[i][t];
                for (size_t t = 0; t < n; ++t) M.at(powers.size(), t) = cur[t];
                FpMat Mc = M;
                if (fp_rref(Mc) <= powers.size()) {
                    auto coeffs = express_in_basis(powers, cur, p);
                    check(coeffs.has_value(), errc::internal, "split: minpoly");
                    FpPoly mp(d + 1, Int(0));
                    mp[d] = 1;
                    for (size_t i = 0; i < coeffs->size(); ++i) mp[i] = fdiv_r(-(*coeffs)[i], p);
                    minpoly = fp_trim(std::move(mp));
                } else {
                    powers.push_back(cur);
                }
            }
            check(!minpoly.empty(), errc::internal, "split: minpoly missing");
            auto roots = fp_roots(minpoly, p);
            check(roots.size() == static_cast<size_t>(fp_deg(minpoly)) && roots.size() >= 2,
                  errc::internal, "split: minpoly roots");
            for (const auto& c : roots) {
                std::vector<Int> idem = comp.identity;
                for (const auto& c2 : roots) {
                    if (c2 == c) continue;
                    Int scale = invmod(fdiv_r(c - c2, p), p);
                    std::vector<Int> factor(n);
                    for (size_t t = 0; t < n; ++t)
                        factor[t] = fdiv_r((bvec[t] - c2 * comp.identity[t]) * scale, p);
                    idem = mulr(idem, factor);
                }
                std::vector<std::vector<Int>> rows;
                for (const auto& bs : comp.basis) rows.push_back(mulr(idem, bs));
                FpMat M(rows.size(), n, p);
                for (size_t i = 0; i < rows.size(); ++i)
                    for (size_t t = 0; t < n; ++t) M.at(i, t) = rows[i][t];
                size_t rank = fp_rref(M);
                Component sub;
                for (size_t i = 0; i < rank; ++i) {
                    std::vector<Int> row(n);
                    for (size_t t = 0; t < n; ++t) row[t] = M.at(i, t);
                    sub.basis.push_back(std::move(row));
                }
                sub.identity = idem;
                split_rec(sub);
            }
        };
        split_rec(top);
    }

    // build prime ideals: P_i = pO + radical + (other components)
    std::vector<PrimeIdeal> out;
    for (size_t ci = 0; ci < fields.size(); ++ci) {
        size_t fi = fields[ci].basis.size();
        std::vector<std::vector<Int>> mrows;
        for (size_t i = 0; i < rad.rows; ++i) {
            std::vector<Int> row(n);
            for (size_t t = 0; t < n; ++t) row[t] = rad.at(i, t);
            mrows.push_back(std::move(row));
        }
        for (size_t cj = 0; cj < fields.size(); ++cj) {
            if (cj == ci) continue;
            for (const auto& row : fields[cj].basis) mrows.push_back(row);
        }
        ZMat stack(n + mrows.size(), n);
        for (size_t i = 0; i < n; ++i) stack.at(i, i) = p;
        for (size_t i = 0; i < mrows.size(); ++i)
            for (size_t t = 0; t < n; ++t) stack.at(n + i, t) = mrows[i][t];
        PrimeIdeal P;
        P.p = p;
        P.P = ideal_canonical(K, std::move(stack), Int(1));
        P.f = static_cast<int>(fi);
        check(ideal_norm(K, P.P) == Rat(pow_ui(p, fi)), errc::internal, "split: prime norm mismatch");
        out.push_back(std::move(P));
    }
    return out;
}

} // namespace

std::vector<PrimeIdeal> split_prime(const NumberField& K, const Int& p) {
    std::vector<PrimeIdeal> out;
    if (K.index() % p != 0) {
        FpPoly fbar = fp_reduce(K.poly(), p);
        auto facs = fp_factor(fbar, p);
        for (const auto& fac : facs) {
            PrimeIdeal P;
            P.p = p;
            P.e = static_cast<int>(fac.multiplicity);
            P.f = fp_deg(fac.poly);
            if (P.f == K.degree()) {
                P.P = ideal_from_int(K, p); // inert
            } else {
                // P = (p, g(theta))
                std::vector<Rat> coeffs(fac.poly.size());
                for (size_t i = 0; i < fac.poly.size(); ++i) coeffs[i] = Rat(fac.poly[i]);
                auto gtheta = K.from_power_basis(coeffs);
                check(gtheta.has_value(), errc::internal, "split: g(theta) not integral");
                P.P = ideal_from_gens(K, {K.from_int(p), *gtheta});
            }
            out.push_back(std::move(P));
        }
    } else {
        out = split_prime_algebra(K, p);
    }
    // tau elements and (for the algebra path) exact e_i
    for (auto& P : out) {
        FracIdeal inv = ideal_inv(K, P.P);
        // find a basis row of inv not in O
        bool found = false;
        for (size_t i = 0; i < inv.num.rows && !found; ++i) {
            bool integral = true;
            for (size_t j = 0; j < inv.num.cols; ++j)
                if (inv.num.at(i, j) % inv.den != 0) integral = false;
            if (!integral) {
                P.tau_num = Elem(static_cast<size_t>(K.degree()));
                for (size_t j = 0; j < inv.num.cols; ++j) P.tau_num[static_cast<size_t>(j)] = inv.num.at(i, j);
                P.tau_den = inv.den;
                found = true;
            }
        }
        check(found, errc::internal, "split: no tau in P^{-1} \\ O");
    }
    if (K.index() % p == 0) {
        FracIdeal pO = ideal_from_int(K, p);
        int efsum = 0;
        for (auto& P : out) {
            P.e = ideal_valuation(K, P, pO);
            efsum += P.e * P.f;
        }
        check(efsum == K.degree(), errc::internal, "split: sum e_i f_i != n");
    }
    std::sort(out.begin(), out.end(),
              [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.P < b.P; });
    return out;
}

int ideal_valuation(const NumberField& K, const PrimeIdeal& P, const FracIdeal& I) {
    check(I.is_integral(), errc::internal, "ideal_valuation: fractional input");
    int v = 0;
    FracIdeal cur = I;
    while (true) {
        // cur * tau integral?
        FracIdeal next = ideal_mul_elem(K, cur, P.tau_num, P.tau_den);
        if (!next.is_integral()) return v;
        ++v;
        cur = next;
        check(v < 10000, errc::internal, "ideal_valuation runaway");
    }
}

int elem_valuation(const NumberField& K, const PrimeIdeal& P, const Elem& x) {
    check(!K.is_zero(x), errc::internal, "elem_valuation of zero");
    // v_P(x): multiply x by tau^k while the result stays integral
    int v = 0;
    Elem num = x;
    Int den = 1;
    while (true) {
        // next = num * tau_num / (den * tau_den)
        Elem nn = K.mul(num, P.tau_num);
        Int nd = den * P.tau_den;
        // integral iff all coords divisible by nd
        bool integral = true;
        for (const auto& c : nn)
            if (c % nd != 0) integral = false;
        if (!integral) return v;
        for (auto& c : nn) c = divexact(c, nd);
        num = nn;
        den = 1;
        ++v;
        check(v < 10000, errc::internal, "elem_valuation runaway");
    }
}

std::vector<int> splitting_type(const NumberField& K, const Int& p) {
    if (K.index() % p != 0) {
        FpPoly fbar = fp_reduce(K.poly(), p);
        Int dpoly = discriminant(K.poly());
        if (dpoly % p != 0) return fp_factor_degrees_squarefree(fp_monic(fbar, p), p);
        std::vector<int> out;
        for (const auto& fac : fp_factor(fbar, p)) out.push_back(fp_deg(fac.poly));
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<int> out;
    for (const auto& P : split_prime(K, p)) out.push_back(P.f);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ct2
