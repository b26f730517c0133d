#include "lattice/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "base/error.hpp"

namespace ct2 {

std::vector<RIval> embedding_row(const NumberField& K, const Elem& x, const Int& den, long bits) {
    auto vals = K.embed(x, bits);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    RIval d = RIval::from_int(den, prec);
    std::vector<RIval> row;
    row.reserve(static_cast<size_t>(K.degree()));
    for (int i = 0; i < K.r_real(); ++i) row.push_back(vals[static_cast<size_t>(i)].re / d);
    for (int i = K.r_real(); i < K.places(); ++i) {
        row.push_back(vals[static_cast<size_t>(i)].re / d);
        row.push_back(vals[static_cast<size_t>(i)].im / d);
    }
    return row;
}

namespace {

struct MpfrMat {
    size_t rows = 0, cols = 0;
    mpfr_prec_t prec;
    std::vector<double> dummy;
    std::vector<mpfr_t> a;

    MpfrMat(size_t r, size_t c, mpfr_prec_t p) : rows(r), cols(c), prec(p), a(r * c) {
        for (auto& x : a) mpfr_init2(x, p);
    }
    ~MpfrMat() {
        for (auto& x : a) mpfr_clear(x);
    }
    mpfr_t& at(size_t i, size_t j) { return a[i * cols + j]; }
};

} // namespace

ZMat lll_transform(const std::vector<std::vector<RIval>>& rows, mpfr_prec_t prec) {
    size_t n = rows.size();
    check(n > 0, errc::internal, "lll: empty basis");
    size_t m = rows[0].size();
    MpfrMat B(n, m, prec);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            mpfr_add(B.at(i, j), rows[i][j].lo(), rows[i][j].hi(), MPFR_RNDN);
            mpfr_div_2ui(B.at(i, j), B.at(i, j), 1, MPFR_RNDN);
        }
    ZMat U = ZMat::identity(n);

    // Gram-Schmidt data recomputed from scratch (n is tiny).
    MpfrMat mu(n, n, prec), gs(n, m, prec);
    std::vector<mpfr_t> Bstar(n);
    for (auto& x : Bstar) mpfr_init2(x, prec);
    mpfr_t t1, t2;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);

    auto recompute_gs = [&]() {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < m; ++j) mpfr_set(gs.at(i, j), B.at(i, j), MPFR_RNDN);
            for (size_t k = 0; k < i; ++k) {
                // mu_ik = <b_i, gs_k>/Bstar_k
                mpfr_set_zero(t1, 1);
                for (size_t j = 0; j < m; ++j) {
                    mpfr_mul(t2, B.at(i, j), gs.at(k, j), MPFR_RNDN);
                    mpfr_add(t1, t1, t2, MPFR_RNDN);
                }
                mpfr_div(mu.at(i, k), t1, Bstar[k], MPFR_RNDN);
                for (size_t j = 0; j < m; ++j) {
                    mpfr_mul(t2, mu.at(i, k), gs.at(k, j), MPFR_RNDN);
                    mpfr_sub(gs.at(i, j), gs.at(i, j), t2, MPFR_RNDN);
                }
            }
            mpfr_set_zero(Bstar[i], 1);
            for (size_t j = 0; j < m; ++j) {
                mpfr_mul(t2, gs.at(i, j), gs.at(i, j), MPFR_RNDN);
                mpfr_add(Bstar[i], Bstar[i], t2, MPFR_RNDN);
            }
        }
    };

    auto row_sub = [&](size_t i, size_t k, const Int& q) {
        // b_i -= q b_k
        mpfr_t qm;
        mpfr_init2(qm, prec);
        mpfr_set_z(qm, q.get_mpz_t(), MPFR_RNDN);
        for (size_t j = 0; j < m; ++j) {
            mpfr_mul(t2, qm, B.at(k, j), MPFR_RNDN);
            mpfr_sub(B.at(i, j), B.at(i, j), t2, MPFR_RNDN);
        }
        mpfr_clear(qm);
        for (size_t j = 0; j < n; ++j) U.at(i, j) -= q * U.at(k, j);
    };

    recompute_gs();
    size_t k = 1;
    long iters = 0;
    const long max_iters = 200000;
    while (k < n && iters++ < max_iters) {
        // size reduce row k
        bool changed = false;
        for (size_t j = k; j-- > 0;) {
            mpfr_round(t1, mu.at(k, j));
            if (!mpfr_zero_p(t1)) {
                mpz_class q;
                mpfr_get_z(q.get_mpz_t(), t1, MPFR_RNDN);
                if (q != 0) {
                    row_sub(k, j, q);
                    changed = true;
                }
            }
        }
        if (changed) recompute_gs();
        // Lovasz condition with delta = 0.99
        mpfr_mul(t1, mu.at(k, k - 1), mu.at(k, k - 1), MPFR_RNDN);
        mpfr_d_sub(t1, 0.99, t1, MPFR_RNDN);
        mpfr_mul(t1, t1, Bstar[k - 1], MPFR_RNDN);
        if (mpfr_cmp(Bstar[k], t1) >= 0) {
            ++k;
        } else {
            for (size_t j = 0; j < m; ++j) mpfr_swap(B.at(k, j), B.at(k - 1, j));
            for (size_t j = 0; j < n; ++j) std::swap(U.at(k, j), U.at(k - 1, j));
            recompute_gs();
            k = (k >= 2) ? k - 1 : 1;
        }
    }
    for (auto& x : Bstar) mpfr_clear(x);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return U;
}

std::vector<Elem> lll_reduce_elems(const NumberField& K, const std::vector<Elem>& gens,
                                   const Int& den, long bits, ZMat* transform) {
    std::vector<std::vector<RIval>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(embedding_row(K, g, den, bits));
    ZMat U = lll_transform(rows, static_cast<mpfr_prec_t>(bits + 64));
    std::vector<Elem> out;
    out.reserve(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        Elem acc = K.zero();
        for (size_t j = 0; j < gens.size(); ++j)
            if (U.at(i, j) != 0) acc = K.add(acc, K.mul_int(gens[j], U.at(i, j)));
        out.push_back(std::move(acc));
    }
    if (transform) *transform = U;
    return out;
}

std::vector<std::vector<Int>> enumerate_quadratic(const std::vector<std::vector<RIval>>& rows,
                                                  const RIval& bound2, size_t budget) {
    size_t n = rows.size();
    check(n > 0, errc::internal, "enumerate: empty");
    mpfr_prec_t prec = rows[0][0].prec();
    // Gram matrix (intervals)
    std::vector<std::vector<RIval>> G(n, std::vector<RIval>(n, RIval(prec)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) {
            RIval acc = RIval::from_long(0, prec);
            for (size_t t = 0; t < rows[i].size(); ++t) acc = acc + rows[i][t] * rows[j][t];
            G[i][j] = acc;
            G[j][i] = acc;
        }
    // Interval Cholesky: G = R^T R with R upper triangular.
    std::vector<std::vector<RIval>> R(n, std::vector<RIval>(n, RIval(prec)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            RIval acc = G[i][j];
            for (size_t k = 0; k < i; ++k) acc = acc - R[k][i] * R[k][j];
            if (i == j) {
                check(acc.is_certainly_positive(), errc::precision_exhausted,
                      "enumeration: Cholesky pivot not certainly positive");
                R[i][i] = acc.sqrt();
            } else {
                R[i][j] = acc / R[i][i];
            }
        }
    }
    // Recursive enumeration, outermost coordinate last. Bounds use interval
    // sups so the output is a superset of the exact solution set.
    std::vector<std::vector<Int>> out;
    std::vector<Int> coord(n, Int(0));
    std::vector<double> centers(n, 0.0);
    // work with doubles for the recursion bounds, inflated slightly.
    std::vector<std::vector<double>> Rd(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) Rd[i][j] = R[i][j].mid_d();
    double C = bound2.mag_d() * (1.0 + 1e-9) + 1e-12;
    // inflate the triangular factor's effect: use a global epsilon on ranges.
    const double eps = 1e-7;

    struct Frame {
        double partial; // sum of squares of fixed outer coordinates
        std::vector<double> proj; // projected center contributions per row
    };

    // iterative depth-first over coordinates n-1 .. 0
    std::vector<Int> lo(n), hi(n), cur(n);
    std::vector<double> partial(n + 1, 0.0);
    std::vector<std::vector<double>> shift(n + 1, std::vector<double>(n, 0.0));
    // shift[level][i] = sum_{j>level-ish} Rd[i][j]*x_j accumulated
    long level = static_cast<long>(n) - 1;
    bool descending = true;
    size_t count = 0;
    while (level < static_cast<long>(n)) {
        size_t ul = static_cast<size_t>(level);
        if (level < 0) {
            // full assignment: canonical sign (first nonzero from outermost is... ) handled by caller-side
            out.push_back(cur);
            check(++count <= budget, errc::budget_exceeded, "enumeration budget exceeded");
            ++level;
            descending = false;
            // fallthrough to increment below
        } else if (descending) {
            double rem = C - partial[ul + 1];
            if (rem < -1e-12) {
                ++level;
                descending = false;
                continue;
            }
            double rad = std::sqrt(std::max(rem, 0.0)) / std::max(Rd[ul][ul], 1e-300);
            double center = -shift[ul + 1][ul] / std::max(Rd[ul][ul], 1e-300);
            double slack = eps + 1e-9 * (std::fabs(center) + rad);
            double lo_d = center - rad - slack, hi_d = center + rad + slack;
            lo[ul] = Int(static_cast<long>(std::ceil(lo_d)));
            hi[ul] = Int(static_cast<long>(std::floor(hi_d)));
            cur[ul] = lo[ul];
            if (cur[ul] > hi[ul]) {
                ++level;
                descending = false;
                continue;
            }
            // compute partial/shift for next level
            double xi = cur[ul].get_d();
            double term = Rd[ul][ul] * xi + shift[ul + 1][ul];
            partial[ul] = partial[ul + 1] + term * term;
            for (size_t i = 0; i < ul; ++i) shift[ul][i] = shift[ul + 1][i] + Rd[i][ul] * xi;
            --level;
            descending = true;
        } else {
            // increment at this level
            cur[ul] += 1;
            if (cur[ul] > hi[ul]) {
                ++level;
                descending = false;
                continue;
            }
            double xi = cur[ul].get_d();
            double term = Rd[ul][ul] * xi + shift[ul + 1][ul];
            partial[ul] = partial[ul + 1] + term * term;
            for (size_t i = 0; i < ul; ++i) shift[ul][i] = shift[ul + 1][i] + Rd[i][ul] * xi;
            --level;
            descending = true;
        }
    }
    // keep only canonical representatives (last nonzero coordinate positive),
    // drop zero
    std::vector<std::vector<Int>> canon;
    canon.reserve(out.size() / 2 + 1);
    for (auto& c : out) {
        int sign = 0;
        for (size_t i = n; i-- > 0;)
            if (c[i] != 0) {
                sign = c[i] > 0 ? 1 : -1;
                break;
            }
        if (sign > 0) canon.push_back(std::move(c));
    }
    std::sort(canon.begin(), canon.end());
    return canon;
}

namespace {

// Exact certificate for |x|_v = base^{1/root} style boundary cases:
// true iff x^root == +-(a/b) * 1 with radius^root = a/b, i.e.
// b * x^root -+ a == 0 as a field element.
bool boundary_equal_all_places(const NumberField& K, const Elem& x, const BoxRadius& radius) {
    Elem xr = K.pow(x, radius.root);
    Int a(radius.base.get_num()), b(radius.base.get_den());
    Elem lhs = K.mul_int(xr, b);
    Elem plus = K.sub(lhs, K.from_int(a));
    if (K.is_zero(plus)) return true;
    Elem minus = K.add(lhs, K.from_int(a));
    return K.is_zero(minus);
}

} // namespace

bool box_contains(const NumberField& K, const Elem& x, const BoxRadius& radius) {
    if (K.is_zero(x)) return true;
    // imaginary quadratic fast exact path: |x|^2 = N(x), radius^2 exact
    if (K.degree() == 2 && K.s_complex() == 1) {
        // |x|^2 <= base^{2/root}: compare N(x)^root <= base^2
        Rat lhs = Rat(pow_ui(K.norm(x), radius.root));
        Rat rhs = radius.base * radius.base;
        return lhs <= rhs;
    }
    for (long bits = 96; bits <= NumberField::bits_cap; bits *= 2) {
        auto av = K.abs_embed(x, bits);
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
        RIval rb = RIval::from_rat(radius.base, prec);
        bool all_in = true, any_undecided = false;
        for (auto& v : av) {
            RIval lhs = v.pow_ui(radius.root);
            if (lhs.certainly_le(rb)) continue;
            if (rb.certainly_lt(lhs)) {
                all_in = false;
                break;
            }
            any_undecided = true;
        }
        if (!any_undecided || !all_in) return all_in;
        // undecided boundary: exact certificate, else refine
        if (boundary_equal_all_places(K, x, radius)) return true;
    }
    fail(errc::precision_exhausted, "box membership undecidable at precision cap");
}

std::vector<Elem> enumerate_box(const NumberField& K, const BoxRadius& radius, size_t budget) {
    size_t n = static_cast<size_t>(K.degree());
    long bits = 128;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    // Euclidean ball of radius^2 * (r + s) circumscribes the box.
    RIval r2 = radius.as_interval(prec).sq() * RIval::from_long(K.places(), prec);
    std::vector<Elem> basis;
    for (size_t i = 0; i < n; ++i) {
        Elem e = K.zero();
        e[i] = 1;
        basis.push_back(e);
    }
    // LLL first for enumeration efficiency.
    ZMat U;
    std::vector<Elem> red = lll_reduce_elems(K, basis, Int(1), bits, &U);
    std::vector<std::vector<RIval>> rows;
    for (const auto& g : red) rows.push_back(embedding_row(K, g, Int(1), bits));
    auto coords = enumerate_quadratic(rows, r2, budget);
    std::vector<Elem> out;
    out.push_back(K.zero());
    for (const auto& c : coords) {
        Elem x = K.zero();
        for (size_t j = 0; j < n; ++j)
            if (c[j] != 0) x = K.add(x, K.mul_int(red[j], c[j]));
        if (box_contains(K, x, radius)) {
            out.push_back(x);
            out.push_back(K.neg(x));
        }
    }
    std::sort(out.begin(), out.end());
    check(out.size() <= budget, errc::budget_exceeded, "box point count exceeds budget");
    return out;
}

RIval covolume(const NumberField& K, long bits) {
    size_t n = static_cast<size_t>(K.degree());
    std::vector<std::vector<RIval>> rows;
    for (size_t i = 0; i < n; ++i) {
        Elem e = K.zero();
        e[i] = 1;
        rows.push_back(embedding_row(K, e, Int(1), bits));
    }
    return ival_det(std::move(rows)).abs();
}

namespace {

// Certified sorted order of candidate vectors by length, ties broken
// lexicographically on coordinates. Exact paths where available.
struct LengthSorter {
    const NumberField& K;
    long bits;

    bool lt(const std::pair<Elem, RIval>& a, const std::pair<Elem, RIval>& b) const {
        if (a.first == b.first) return false;
        int c;
        if (a.second.certainly_lt(b.second))
            c = -1;
        else if (b.second.certainly_lt(a.second))
            c = 1;
        else
            c = K.compare_length2(a.first, b.first);
        if (c != 0) return c < 0;
        return a.first < b.first;
    }
};

} // namespace

Minima successive_minima(const NumberField& K, size_t budget) {
    size_t n = static_cast<size_t>(K.degree());
    long bits = 128;
    std::vector<Elem> basis;
    for (size_t i = 0; i < n; ++i) {
        Elem e = K.zero();
        e[i] = 1;
        basis.push_back(e);
    }
    std::vector<Elem> red = lll_reduce_elems(K, basis, Int(1), bits);
    // enumeration bound: max reduced length^2 (sup)
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    RIval bound2 = RIval::from_long(0, prec);
    for (const auto& g : red) bound2 = bound2.max(K.length2(g, bits));
    bound2 = bound2 * RIval::from_rat(Rat(1048577, 1048576), prec); // tiny inflation
    std::vector<std::vector<RIval>> rows;
    for (const auto& g : red) rows.push_back(embedding_row(K, g, Int(1), bits));
    auto coords = enumerate_quadratic(rows, bound2, budget);
    std::vector<std::pair<Elem, RIval>> cands;
    for (const auto& c : coords) {
        Elem x = K.zero();
        for (size_t j = 0; j < n; ++j)
            if (c[j] != 0) x = K.add(x, K.mul_int(red[j], c[j]));
        cands.emplace_back(x, K.length2(x, bits).sqrt());
    }
    LengthSorter sorter{K, bits};
    std::sort(cands.begin(), cands.end(),
              [&](const auto& a, const auto& b) { return sorter.lt(a, b); });
    Minima out;
    ZMat stack(n, n);
    size_t rank = 0;
    for (const auto& [x, len] : cands) {
        if (rank == n) break;
        // independence over Q: coordinates over O_K basis
        for (size_t j = 0; j < n; ++j) stack.at(rank, j) = x[j];
        ZMat sub(rank + 1, n);
        for (size_t i = 0; i <= rank; ++i)
            for (size_t j = 0; j < n; ++j) sub.at(i, j) = stack.at(i, j);
        size_t r = 0;
        hnf(sub, nullptr, &r);
        if (r == rank + 1) {
            out.vectors.push_back(x);
            out.lengths.push_back(len);
            ++rank;
        }
    }
    check(rank == n, errc::internal, "successive minima: enumeration bound too small");
    return out;
}

ReducedBasis minkowski_reduce(const NumberField& K, int exact_limit, size_t budget) {
    size_t n = static_cast<size_t>(K.degree());
    long bits = 128;
    ReducedBasis out;
    std::vector<Elem> basis;
    for (size_t i = 0; i < n; ++i) {
        Elem e = K.zero();
        e[i] = 1;
        basis.push_back(e);
    }
    if (K.degree() > exact_limit) {
        out.exact = false;
        std::vector<Elem> red = lll_reduce_elems(K, basis, Int(1), bits);
        // order by length, put a canonical 1 first if present
        std::vector<std::pair<Elem, RIval>> cands;
        for (auto& g : red) cands.emplace_back(g, K.length2(g, bits).sqrt());
        LengthSorter sorter{K, bits};
        std::sort(cands.begin(), cands.end(),
                  [&](const auto& a, const auto& b) { return sorter.lt(a, b); });
        for (auto& [v, l] : cands) {
            out.vectors.push_back(v);
            out.lengths.push_back(l);
        }
        return out;
    }
    std::vector<Elem> red = lll_reduce_elems(K, basis, Int(1), bits);
    std::vector<std::vector<RIval>> rows;
    for (const auto& g : red) rows.push_back(embedding_row(K, g, Int(1), bits));
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    RIval bound2 = RIval::from_long(0, prec);
    for (const auto& g : red) bound2 = bound2.max(K.length2(g, bits));
    bound2 = bound2 * RIval::from_rat(Rat(1048577, 1048576), prec);

    std::vector<std::pair<Elem, RIval>> cands;
    LengthSorter sorter{K, bits};
    auto regenerate = [&]() {
        auto coords = enumerate_quadratic(rows, bound2, budget);
        cands.clear();
        for (const auto& c : coords) {
            Elem x = K.zero();
            for (size_t j = 0; j < n; ++j)
                if (c[j] != 0) x = K.add(x, K.mul_int(red[j], c[j]));
            cands.emplace_back(x, K.length2(x, bits).sqrt());
        }
        std::sort(cands.begin(), cands.end(),
                  [&](const auto& a, const auto& b) { return sorter.lt(a, b); });
    };
    regenerate();

    out.vectors.push_back(K.one());
    out.lengths.push_back(K.length2(K.one(), bits).sqrt());
    int escalations = 0;
    while (out.vectors.size() < n) {
        bool found = false;
        for (const auto& [x, len] : cands) {
            // primitive extension: snf of stacked coords all 1
            size_t k = out.vectors.size();
            ZMat stack(k + 1, n);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < n; ++j) stack.at(i, j) = out.vectors[i][j];
            for (size_t j = 0; j < n; ++j) stack.at(k, j) = x[j];
            auto d = snf(stack);
            bool ok = d.size() == k + 1;
            for (const auto& di : d) ok = ok && di == 1;
            if (ok) {
                out.vectors.push_back(x);
                out.lengths.push_back(len);
                found = true;
                break;
            }
        }
        if (!found) {
            // The greedy extension can exceed the LLL length bound; widen.
            check(++escalations <= 8, errc::budget_exceeded, "minkowski_reduce: bound escalation limit");
            bound2 = bound2 * RIval::from_long(4, prec);
            regenerate();
        }
    }
    return out;
}

RegularityReport regularity_report(const NumberField& K) {
    RegularityReport rep;
    rep.basis = minkowski_reduce(K);
    size_t n = static_cast<size_t>(K.degree());
    long bits = 128;
    // ratios
    RIval dn = RIval::from_int(abs(K.disc()), 192).root_ui(static_cast<unsigned long>(n));
    rep.ratio_last = (rep.basis.lengths.back() / dn).mid_d();
    RIval prod = RIval::from_long(1, 192);
    for (size_t i = 1; i < n; ++i) prod = prod * rep.basis.lengths[i];
    rep.ratio_product = (prod / RIval::from_int(abs(K.disc()), 192).sqrt()).mid_d();
    (void)bits;
    if (n <= 2) {
        rep.matrix_A = ZMat(0, 0);
        rep.matrix_A_nondegenerate = true;
        return rep;
    }
    // basis coordinate matrix W (rows = v_i over O_K basis)
    ZMat W(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) W.at(i, j) = rep.basis.vectors[i][j];
    rep.matrix_A = ZMat(n - 2, n - 2);
    for (size_t i = 1; i <= n - 2; ++i)
        for (size_t j = 1; j <= n - 2; ++j) {
            Elem prod_el = K.mul(rep.basis.vectors[i], rep.basis.vectors[j]);
            std::vector<Int> rhs(prod_el.begin(), prod_el.end());
            auto y = solve_left(W, rhs);
            check(y.has_value(), errc::internal, "regularity: expansion failed");
            rep.matrix_A.at(i - 1, j - 1) = (*y)[n - 1];
        }
    rep.matrix_A_nondegenerate = det(rep.matrix_A) != 0;
    // permutation with nonzero entries, by brute force (n-2 <= 4)
    size_t k = n - 2;
    std::vector<size_t> perm(k);
    for (size_t i = 0; i < k; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) ok = rep.matrix_A.at(i, perm[i]) != 0;
        if (ok) {
            rep.permutation = perm;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rep;
}

MinkowskiCheck minkowski_second_check(const NumberField& K, const Minima& minima) {
    MinkowskiCheck out;
    long bits = 192;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    size_t n = static_cast<size_t>(K.degree());
    RIval cov = covolume(K, bits);
    RIval prod = RIval::from_long(1, prec);
    for (const auto& l : minima.lengths) prod = prod * l;
    // V_n for n <= 6 in closed form
    RIval pi = RIval::pi(prec);
    RIval vn = RIval::from_long(1, prec);
    switch (n) {
        case 1: vn = RIval::from_long(2, prec); break;
        case 2: vn = pi; break;
        case 3: vn = pi * RIval::from_rat(Rat(4, 3), prec); break;
        case 4: vn = pi.sq() * RIval::from_rat(Rat(1, 2), prec); break;
        case 5: vn = pi.sq() * RIval::from_rat(Rat(8, 15), prec); break;
        case 6: vn = pi.sq() * pi * RIval::from_rat(Rat(1, 6), prec); break;
        default: fail(errc::internal, "minkowski check: degree out of range");
    }
    Int twon = pow_ui(Int(2), static_cast<unsigned long>(n));
    Int fact = 1;
    for (size_t i = 2; i <= n; ++i) fact *= static_cast<long>(i);
    RIval lower = RIval::from_rat(Rat(twon) / Rat(fact), prec) * cov;
    RIval upper = RIval::from_int(twon, prec) * cov;
    RIval mid = vn * prod;
    out.lower_ok = lower.certainly_le(mid);
    out.upper_ok = mid.certainly_le(upper);
    out.product = prod.mid_d();
    out.covol = cov.mid_d();
    return out;
}

} // namespace ct2
