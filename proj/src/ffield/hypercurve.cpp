#include "ffield/hypercurve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "base/error.hpp"
#include "field/rootcert.hpp"

namespace ct2 {

const GF& gf_cache(long p, int m) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::unique_ptr<GF>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<GF>(p, m)).first;
    return *it->second;
}

long gf_embedding(const GF& small, const GF& big) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, long> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(small.q(), big.q());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, small.embedding_exponent(big)).first;
    return it->second;
}

HyperCurve make_curve(long p, int k, const GFPoly& f_in) {
    HyperCurve c;
    c.p = p;
    c.k = k;
    c.q = 1;
    for (int i = 0; i < k; ++i) c.q *= p;
    c.f = gf_trim(f_in);
    const GF& F = c.field();
    int d = gf_deg(c.f);
    check(d >= 3, errc::usage, "curve: deg f >= 3 required");
    check(gf_is_squarefree(F, c.f), errc::usage, "curve: f must be separable");
    c.genus = (d - 1) / 2;
    c.odd_degree_model = (d % 2 == 1);
    check(c.genus >= 1, errc::usage, "curve: genus >= 1 required");
    return c;
}

HyperCurve parse_curve(const std::string& line) {
    auto semi = line.find(';');
    check(semi != std::string::npos, errc::usage, "curve line: expected 'q;c0,c1,...'");
    long q = std::stol(line.substr(0, semi));
    long p = q;
    int k = 1;
    // factor q = p^k with p prime
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            p = d;
            k = 0;
            long t = q;
            while (t > 1) {
                check(t % p == 0, errc::usage, "curve line: q must be a prime power");
                t /= p;
                ++k;
            }
            break;
        }
    }
    check(p % 2 == 1, errc::even_characteristic, "curve line: odd characteristic required");
    const GF& F = gf_cache(p, k);
    GFPoly f;
    for (const auto& tok : [&] {
             std::vector<std::string> parts;
             std::istringstream is(line.substr(semi + 1));
             std::string t;
             while (std::getline(is, t, ',')) parts.push_back(t);
             return parts;
         }()) {
        std::string s = tok;
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        if (!s.empty() && s[0] == 'g') {
            f.push_back(static_cast<GF::El>(std::stol(s.substr(1)) % (q - 1)));
        } else {
            f.push_back(F.from_int(std::stol(s)));
        }
    }
    return make_curve(p, k, f);
}

std::string format_curve(const HyperCurve& c) {
    std::ostringstream os;
    os << c.q << ";";
    const GF& F = c.field();
    for (size_t i = 0; i < c.f.size(); ++i) {
        if (i) os << ",";
        if (F.is_zero(c.f[i])) {
            os << 0;
        } else {
            // print prime-field values as integers, others as g<k>
            bool printed = false;
            for (long v = 1; v < c.p; ++v)
                if (F.from_int(v) == c.f[i]) {
                    os << v;
                    printed = true;
                    break;
                }
            if (!printed) os << "g" << c.f[i];
        }
    }
    return os.str();
}

long count_points(const HyperCurve& c, int i) {
    const GF& Fq = c.field();
    const GF& Fi = gf_cache(c.p, c.k * i);
    long e = (Fi.q() == Fq.q()) ? 1 : gf_embedding(Fq, Fi);
    GFPoly fbig(c.f.size());
    for (size_t t = 0; t < c.f.size(); ++t) fbig[t] = Fq.embed_into(Fi, e, c.f[t]);
    long count = 0;
    for (GF::El x : Fi.elements()) {
        GF::El v = gf_eval(Fi, fbig, x);
        if (Fi.is_zero(v))
            count += 1;
        else if (Fi.is_square(v))
            count += 2;
    }
    if (c.odd_degree_model) {
        count += 1;
    } else {
        GF::El lc = fbig.back();
        if (Fi.is_square(lc)) count += 2;
    }
    return count;
}

LPolynomial l_polynomial(const HyperCurve& c) {
    int g = c.genus;
    long q = c.q;
    std::vector<Int> P(static_cast<size_t>(g) + 2, Int(0)); // power sums, 1-indexed
    std::vector<long> N(static_cast<size_t>(g) + 2, 0);
    Int qi = 1;
    for (int i = 1; i <= g; ++i) {
        N[static_cast<size_t>(i)] = count_points(c, i);
        qi *= q;
        P[static_cast<size_t>(i)] = qi + 1 - N[static_cast<size_t>(i)];
    }
    // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    std::vector<Int> e(static_cast<size_t>(2 * g) + 1, Int(0));
    e[0] = 1;
    for (int kk = 1; kk <= g; ++kk) {
        Int acc = 0;
        for (int i = 1; i <= kk; ++i) {
            Int term = e[static_cast<size_t>(kk - i)] * P[static_cast<size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        check(acc % kk == 0, errc::internal, "newton identity division");
        e[static_cast<size_t>(kk)] = divexact(acc, Int(kk));
    }
    LPolynomial L;
    L.a.assign(static_cast<size_t>(2 * g) + 1, Int(0));
    L.a[0] = 1;
    for (int kk = 1; kk <= g; ++kk) L.a[static_cast<size_t>(kk)] = (kk % 2 == 0 ? e[static_cast<size_t>(kk)] : -e[static_cast<size_t>(kk)]);
    // functional equation a_{2g-i} = q^{g-i} a_i
    for (int i = g - 1; i >= 0; --i) {
        Int scale = pow_ui(Int(q), static_cast<unsigned long>(g - i));
        L.a[static_cast<size_t>(2 * g - i)] = scale * L.a[static_cast<size_t>(i)];
    }
    // back out all e_k (e_k = (-1)^k a_k) and predict N_{g+1}
    for (int kk = g + 1; kk <= 2 * g; ++kk) e[static_cast<size_t>(kk)] = (kk % 2 == 0 ? L.a[static_cast<size_t>(kk)] : -L.a[static_cast<size_t>(kk)]);
    {
        int kk = g + 1;
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        Int acc = 0;
        for (int i = 1; i <= kk - 1; ++i) {
            Int term = e[static_cast<size_t>(i)] * P[static_cast<size_t>(kk - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        Int last = Int(kk) * e[static_cast<size_t>(kk)];
        acc += (kk % 2 == 1) ? last : -last;
        Int qg1 = pow_ui(Int(q), static_cast<unsigned long>(g) + 1);
        Int predicted_N = qg1 + 1 - acc;
        long actual = count_points(c, g + 1);
        check(predicted_N == actual, errc::zeta_inconsistent,
              "L-polynomial prediction of N_{g+1} failed for " + format_curve(c));
    }
    check(L.L1() >= 1, errc::zeta_inconsistent, "L(1) < 1");
    return L;
}

double weil_deviation(const LPolynomial& L, long q) {
    ZPoly lz{std::vector<Int>(L.a.begin(), L.a.end())};
    ZPoly sf = squarefree_part(lz);
    RootSystem rs = RootSystem::isolate(sf, 96);
    double dev = 0;
    double sq = std::sqrt(static_cast<double>(q));
    for (const auto& box : rs.roots()) {
        // roots are 1/alpha: |root| should be q^{-1/2}
        double ab = box.as_cival().abs().mid_d();
        dev = std::max(dev, std::fabs(1.0 / ab - sq));
    }
    return dev;
}

TwoTorsionData two_torsion_size(const HyperCurve& c) {
    const GF& F = c.field();
    TwoTorsionData out;
    out.cycle_type = gf_factor_degrees(F, gf_monic(F, c.f));
    int d = gf_deg(c.f);
    // permutation with the given cycle type
    std::vector<int> perm(static_cast<size_t>(d));
    {
        int pos = 0;
        for (int len : out.cycle_type) {
            for (int i = 0; i < len; ++i) perm[static_cast<size_t>(pos + i)] = pos + (i + 1) % len;
            pos += len;
        }
    }
    // brute force over F_2^d
    long count = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        int parity = __builtin_popcount(mask) & 1;
        if (parity != 0) continue; // sum-zero
        unsigned image = 0;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) image |= 1u << perm[static_cast<size_t>(i)];
        unsigned diff = image ^ mask;
        if (c.odd_degree_model) {
            if (diff == 0) ++count;
        } else {
            unsigned ones = (1u << d) - 1;
            if (diff == 0 || diff == ones) ++count;
        }
    }
    if (!c.odd_degree_model) count /= 2; // quotient by the all-ones vector
    check(count > 0 && (count & (count - 1)) == 0, errc::internal, "2-torsion count not a 2-power");
    out.dim2 = 0;
    while ((1L << out.dim2) < count) ++out.dim2;
    check(out.dim2 <= 2 * c.genus, errc::theorem_violation, "J[2] dimension exceeds 2g");
    return out;
}

H0SquareReport h0_square_classes(const HyperCurve& c) {
    check(c.odd_degree_model, errc::even_degree_model,
          "H^0(C,2E) basis needs the odd-degree model");
    const GF& F = c.field();
    int g = c.genus;
    H0SquareReport rep;
    rep.h0_size = pow_ui(Int(c.q), static_cast<unsigned long>(g) + 1);
    auto facs = gf_factor(F, gf_monic(F, c.f));
    // enumerate monic p of degree 0..g; p qualifies iff radical(p) | f
    std::vector<GFPoly> stack;
    std::set<unsigned> classes;
    std::vector<GF::El> consts = F.elements();
    // iterate all monic polys of each degree via coefficient counters
    for (int d = 0; d <= g; ++d) {
        std::vector<size_t> idx(static_cast<size_t>(d), 0);
        while (true) {
            GFPoly pl(static_cast<size_t>(d) + 1, GF::zero);
            pl[static_cast<size_t>(d)] = F.one();
            for (int i = 0; i < d; ++i) pl[static_cast<size_t>(i)] = consts[idx[static_cast<size_t>(i)]];
            pl = gf_trim(std::move(pl));
            // radical of pl divides f?
            bool ok = true;
            unsigned subset = 0;
            if (d > 0) {
                auto pf = gf_factor(F, pl);
                for (auto& fac : pf) {
                    bool found = false;
                    for (size_t fi = 0; fi < facs.size(); ++fi) {
                        if (facs[fi].poly == fac.poly) {
                            subset |= 1u << fi;
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                ++rep.projective_count;
                unsigned all = (1u << facs.size()) - 1;
                unsigned canon = std::min(subset, all ^ subset);
                classes.insert(canon);
            }
            if (d == 0) break;
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == consts.size()) {
                idx[i] = 0;
                ++i;
            }
            if (i == idx.size()) break;
        }
    }
    rep.induced_classes = static_cast<long>(classes.size());
    auto tt = two_torsion_size(c);
    rep.surjective = Int(rep.induced_classes) == tt.size();
    check(Int(rep.induced_classes) <= tt.size(), errc::internal,
          "square sections hit more classes than J[2](F_q)");
    check(rep.surjective, errc::theorem_violation, "square-section classes do not cover J[2](F_q)");
    check(Int(rep.projective_count) >= tt.size(), errc::theorem_violation,
          "projective H0^sq count below |J[2](F_q)|");
    Int proj_space = divexact(rep.h0_size - 1, Int(c.q - 1));
    check(Int(rep.projective_count) <= proj_space, errc::internal,
          "qualifying sections exceed the projective space");
    return rep;
}

CurveBoundsReport verify_bounds(const HyperCurve& c) {
    CurveBoundsReport rep;
    auto tt = two_torsion_size(c);
    rep.torsion2 = tt.size();
    rep.first_bound = divexact(pow_ui(Int(c.q), static_cast<unsigned long>(c.genus) + 1) - 1, Int(c.q - 1));
    rep.first_ok = rep.torsion2 <= rep.first_bound;
    check(rep.first_ok, errc::theorem_violation,
          "|Pic0[2]| exceeds (q^{g+1}-1)/(q-1) for " + format_curve(c));
    rep.gonality_ratio = rep.torsion2.get_d() / std::pow(static_cast<double>(c.q), c.genus / 2.0);
    return rep;
}

std::vector<GFPoly> all_separable_polys(const GF& F, int d) {
    std::vector<GFPoly> out;
    std::vector<GF::El> consts = F.elements();
    std::vector<size_t> idx(static_cast<size_t>(d), 0);
    std::vector<size_t> lead{1}; // skip zero for the leading coefficient
    for (size_t lc = 1; lc < consts.size(); ++lc) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            GFPoly f(static_cast<size_t>(d) + 1, GF::zero);
            f[static_cast<size_t>(d)] = consts[lc];
            for (int i = 0; i < d; ++i) f[static_cast<size_t>(i)] = consts[idx[static_cast<size_t>(i)]];
            if (gf_is_squarefree(F, f)) out.push_back(f);
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == consts.size()) {
                idx[i] = 0;
                ++i;
            }
            if (i == idx.size()) break;
        }
    }
    return out;
}

} // namespace ct2
