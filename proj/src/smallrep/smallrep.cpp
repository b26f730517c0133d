#include "smallrep/smallrep.hpp"

#include <algorithm>
#include <cmath>

#include "base/error.hpp"
#include "lattice/lattice.hpp"

namespace ct2 {

namespace {

// Balance alpha by unit multiples so its log vector is closer to uniform;
// optimization only, exactness is unaffected.
Elem balance_alpha(const NumberField& K, const ClassGroup& cg, Elem alpha) {
    const auto& units = cg.unit_samples();
    if (units.empty()) return alpha;
    size_t places = static_cast<size_t>(K.places());
    auto logvec = [&](const Elem& x) {
        auto av = K.abs_embed(x, 96);
        std::vector<double> v(places);
        for (size_t i = 0; i < places; ++i) {
            int deg = static_cast<int>(i) < K.r_real() ? 1 : 2;
            v[i] = deg * std::log(std::max(av[i].mid_d(), 1e-300));
        }
        // project out the all-ones direction (norm component)
        double mean = 0;
        for (double t : v) mean += t;
        mean /= static_cast<double>(places);
        for (auto& t : v) t -= mean;
        return v;
    };
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<double> la = logvec(alpha);
        double before = 0;
        for (double t : la) before += t * t;
        bool improved = false;
        for (const auto& u : units) {
            std::vector<double> lu = logvec(u);
            double uu = 0, au = 0;
            for (size_t i = 0; i < places; ++i) {
                uu += lu[i] * lu[i];
                au += la[i] * lu[i];
            }
            if (uu < 1e-12) continue;
            long c = std::lround(au / uu);
            if (c == 0) continue;
            // alpha' = alpha * u^{-c}
            Elem cand = alpha;
            Elem up = K.pow(u, static_cast<unsigned long>(std::labs(c)));
            if (c > 0) {
                auto q = K.div_exact(cand, up);
                if (!q) continue;
                cand = *q;
            } else {
                cand = K.mul(cand, up);
            }
            std::vector<double> lc = logvec(cand);
            double after = 0;
            for (double t : lc) after += t * t;
            if (after < before - 1e-9) {
                alpha = cand;
                la = lc;
                before = after;
                improved = true;
            }
        }
        if (!improved) break;
    }
    return alpha;
}

} // namespace

namespace {

// smallest precision at which every archimedean value of alpha is certainly
// positive (alpha != 0 guarantees termination below the cap)
long separating_bits(const NumberField& K, const Elem& alpha, long start) {
    for (long bits = start; bits <= NumberField::bits_cap; bits *= 2) {
        auto av = K.abs_embed(alpha, bits);
        bool ok = true;
        for (const auto& v : av) ok = ok && v.is_certainly_positive();
        if (ok) return bits;
    }
    fail(errc::precision_exhausted, "archimedean values of alpha not separable from 0");
}

} // namespace

double minkowski_volume_ratio(const NumberField& K, const FracIdeal& I, const Elem& alpha,
                              unsigned m) {
    long bits = separating_bits(K, alpha, 128);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    auto aav = K.abs_embed(alpha, bits);
    RIval d2n = RIval::from_int(abs(K.disc()), prec)
                    .root_ui(2 * static_cast<unsigned long>(K.degree()));
    RIval vol = RIval::from_long(1, prec);
    for (int v = 0; v < K.places(); ++v) {
        RIval rv = d2n / aav[static_cast<size_t>(v)].root_ui(m);
        if (v < K.r_real())
            vol = vol * rv * RIval::from_long(2, prec);
        else
            vol = vol * rv.sq() * RIval::pi(prec);
    }
    FracIdeal inv = ideal_inv(K, I);
    RIval covol = covolume(K, bits) * RIval::from_rat(ideal_norm(K, inv), prec);
    RIval bound = covol * RIval::from_int(pow_ui(Int(2), static_cast<unsigned long>(K.degree())), prec);
    return (vol / bound).mid_d();
}

TorsionWitness small_generator(const NumberField& K, const ClassGroup& cg, const FracIdeal& I,
                               unsigned m) {
    check(m >= 1, errc::usage, "small_generator: m must be >= 1");
    check(I.is_integral(), errc::usage, "small_generator: ideal must be integral");
    size_t n = static_cast<size_t>(K.degree());

    FracIdeal Im = ideal_pow(K, I, static_cast<long>(m));
    auto alpha_opt = cg.is_principal(Im);
    check(alpha_opt.has_value(), errc::usage, "small_generator: I^m is not principal");
    Elem alpha = balance_alpha(K, cg, *alpha_opt);

    // volume sanity: the searched box satisfies Minkowski's condition
    double volratio = minkowski_volume_ratio(K, I, alpha, m);
    check(volratio > 0.999, errc::theorem_violation,
          "Minkowski volume condition violated numerically");

    FracIdeal inv = ideal_inv(K, I);
    auto gens = ideal_basis_elems(K, inv);
    long bits = separating_bits(K, alpha, 160);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);

    // per-place radii R_v = |disc|^{1/2n} |alpha|_v^{-1/m}
    auto aav = K.abs_embed(alpha, bits);
    RIval d2n = RIval::from_int(abs(K.disc()), prec)
                    .root_ui(2 * static_cast<unsigned long>(K.degree()));
    std::vector<RIval> radii;
    for (int v = 0; v < K.places(); ++v)
        radii.push_back(d2n / aav[static_cast<size_t>(v)].root_ui(m));

    // scaled embedding rows: coordinate c of place v divided by R_v; then the
    // box is contained in the ball of squared radius r+s.
    std::vector<std::vector<RIval>> rows;
    for (const auto& g : gens) {
        auto row = embedding_row(K, g, inv.den, bits);
        std::vector<RIval> scaled;
        size_t idx = 0;
        for (int v = 0; v < K.r_real(); ++v) scaled.push_back(row[idx++] / radii[static_cast<size_t>(v)]);
        for (int v = K.r_real(); v < K.places(); ++v) {
            scaled.push_back(row[idx++] / radii[static_cast<size_t>(v)]);
            scaled.push_back(row[idx++] / radii[static_cast<size_t>(v)]);
        }
        rows.push_back(std::move(scaled));
    }
    // LLL on the scaled lattice for enumeration health
    ZMat U = lll_transform(rows, prec);
    std::vector<Elem> red(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        Elem acc = K.zero();
        for (size_t j = 0; j < gens.size(); ++j)
            if (U.at(i, j) != 0) acc = K.add(acc, K.mul_int(gens[j], U.at(i, j)));
        red[i] = acc;
    }
    std::vector<std::vector<RIval>> rred;
    for (const auto& g : red) {
        auto row = embedding_row(K, g, inv.den, bits);
        std::vector<RIval> scaled;
        size_t idx = 0;
        for (int v = 0; v < K.r_real(); ++v) scaled.push_back(row[idx++] / radii[static_cast<size_t>(v)]);
        for (int v = K.r_real(); v < K.places(); ++v) {
            scaled.push_back(row[idx++] / radii[static_cast<size_t>(v)]);
            scaled.push_back(row[idx++] / radii[static_cast<size_t>(v)]);
        }
        rred.push_back(std::move(scaled));
    }
    RIval bound2 = RIval::from_long(K.places(), prec) * RIval::from_rat(Rat(1048577, 1048576), prec);
    auto coords = enumerate_quadratic(rred, bound2, 10'000'000);

    // beta bound: |beta|_v <= |disc|^{m/2n}  <=>  |beta|_v^{2n} <= |disc|^m
    BoxRadius beta_bound{Rat(pow_ui(abs(K.disc()), m)), 2 * static_cast<unsigned>(n)};

    struct Cand {
        Elem kappa;
        Elem beta;
        RIval maxabs;
    };
    std::vector<Cand> valid;
    for (const auto& c : coords) {
        for (int sgn : {1, -1}) {
            Elem kap = K.zero();
            for (size_t j = 0; j < red.size(); ++j)
                if (c[j] != 0) kap = K.add(kap, K.mul_int(red[j], sgn * c[j]));
            if (K.is_zero(kap)) continue;
            // beta = alpha * kappa^m / den^m, must be integral (kappa in I^{-1})
            Elem km = K.pow(kap, m);
            Elem bnum = K.mul(alpha, km);
            Int bden = pow_ui(inv.den, m);
            bool integral = true;
            for (const auto& x : bnum)
                if (x % bden != 0) integral = false;
            if (!integral) continue; // kappa outside I^{-1} cannot happen; guard
            Elem beta(bnum);
            for (auto& x : beta) x = divexact(x, bden);
            if (!box_contains(K, beta, beta_bound)) continue;
            auto bav = K.abs_embed(beta, 128);
            RIval mx = bav[0];
            for (size_t i = 1; i < bav.size(); ++i) mx = mx.max(bav[i]);
            valid.push_back({kap, beta, mx});
            break; // +-kappa give +-... different beta only by (+-1)^m; one suffices for m even; keep first
        }
    }
    check(!valid.empty(), errc::empty_box,
          "no kappa satisfied the Minkowski box for " + format_poly(K.poly()));
    // minimize max_v |beta|_v with lexicographic tie-break on kappa coords
    size_t best = 0;
    for (size_t i = 1; i < valid.size(); ++i) {
        const RIval& a = valid[i].maxabs;
        const RIval& b = valid[best].maxabs;
        if (a.certainly_lt(b))
            best = i;
        else if (!b.certainly_lt(a) && valid[i].kappa < valid[best].kappa)
            best = i;
    }

    TorsionWitness w;
    w.source = I;
    w.m = m;
    w.alpha = alpha;
    w.kappa_num = valid[best].kappa;
    w.kappa_den = inv.den;
    w.beta = valid[best].beta;
    w.ideal = ideal_mul_elem(K, I, w.kappa_num, w.kappa_den);
    check(w.ideal.is_integral(), errc::internal, "witness ideal not integral");
    verify_witness(K, w, true);
    return w;
}

WitnessReport verify_witness(const NumberField& K, const TorsionWitness& w, bool throw_on_invalid) {
    WitnessReport rep;
    auto invalid = [&](const std::string& clause) {
        rep.valid = false;
        rep.violated = clause;
        if (throw_on_invalid) fail(errc::witness_invalid, clause);
        return rep;
    };
    size_t n = static_cast<size_t>(K.degree());
    // I' = kappa * I
    FracIdeal expect = ideal_mul_elem(K, w.source, w.kappa_num, w.kappa_den);
    if (!(expect == w.ideal)) return invalid("ideal-equality: I' != kappa*I");
    if (!w.ideal.is_integral()) return invalid("integrality: I' not integral");
    // beta = alpha * kappa^m
    {
        Elem km = K.pow(w.kappa_num, w.m);
        Elem lhs = K.mul_int(w.beta, pow_ui(w.kappa_den, w.m));
        Elem rhs = K.mul(w.alpha, km);
        if (!(lhs == rhs)) return invalid("element-equality: beta != alpha*kappa^m");
    }
    // I'^m = (beta)
    {
        FracIdeal lhs = ideal_pow(K, w.ideal, static_cast<long>(w.m));
        FracIdeal rhs = ideal_from_elem(K, w.beta);
        if (!(lhs == rhs)) return invalid("ideal-equality: I'^m != (beta)");
    }
    // norm bound: N(beta)^2 <= disc^{2m/2} ... |N(beta)| <= |disc|^{m/2}
    {
        Int nb = abs(K.norm(w.beta));
        if (nb * nb > pow_ui(abs(K.disc()), w.m)) return invalid("norm-bound: |N(beta)| > |disc|^{m/2}");
    }
    // archimedean bounds at doubled precision
    BoxRadius bound{Rat(pow_ui(abs(K.disc()), w.m)), 2 * static_cast<unsigned>(n)};
    if (!box_contains(K, w.beta, bound)) return invalid("place-bound: some |beta|_v > |disc|^{m/2n}");
    // ratio
    auto bav = K.abs_embed(w.beta, 256);
    RIval mx = bav[0];
    for (size_t i = 1; i < bav.size(); ++i) mx = mx.max(bav[i]);
    RIval dbound = RIval::from_int(abs(K.disc()), 320)
                       .root_ui(2 * static_cast<unsigned long>(n))
                       .pow_ui(w.m);
    rep.ratio_max = (mx / dbound).mid_d();
    rep.valid = true;
    return rep;
}

std::vector<Int> class_vector_from_beta(const NumberField& K, const ClassGroup& cg,
                                        const Elem& beta, unsigned m) {
    // factor (beta) into primes over the rational primes dividing N(beta)
    Int N = abs(K.norm(beta));
    FracIdeal half = ideal_one(K);
    for (const auto& [p, e] : factorize(N)) {
        (void)e;
        for (const auto& P : split_prime(K, p)) {
            int v = elem_valuation(K, P, beta);
            if (v == 0) continue;
            check(v % static_cast<int>(m) == 0, errc::theorem_violation,
                  "(beta) is not an m-th power of an ideal");
            half = ideal_mul(K, half, ideal_pow(K, P.P, v / static_cast<int>(m)));
        }
    }
    return cg.class_vector(half);
}

} // namespace ct2
