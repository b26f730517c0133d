#include "ffield/mumford.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "base/error.hpp"

namespace ct2 {

namespace {

struct Mumford {
    GFPoly u, v; // u monic, deg v < deg u, u | v^2 - f
};

std::string mum_key(const Mumford& d) {
    std::ostringstream os;
    for (auto c : d.u) os << c << ".";
    os << "|";
    for (auto c : d.v) os << c << ".";
    return os.str();
}

Mumford cantor_compose(const GF& F, const GFPoly& f, int genus, const Mumford& D1, const Mumford& D2) {
    // composition
    GFPoly e1, e2;
    GFPoly g1 = gf_gcdext(F, D1.u, D2.u, e1, e2);
    GFPoly vsum = gf_add(F, D1.v, D2.v);
    GFPoly c1, c2;
    GFPoly g = gf_gcdext(F, g1, vsum, c1, c2);
    // s1 = c1 e1, s2 = c1 e2, s3 = c2 with s1 u1 + s2 u2 + s3 (v1+v2) = g
    GFPoly s1 = gf_mul(F, c1, e1);
    GFPoly s2 = gf_mul(F, c1, e2);
    const GFPoly& s3 = c2;
    GFPoly u1u2 = gf_mul(F, D1.u, D2.u);
    GFPoly g2 = gf_mul(F, g, g);
    GFPoly u3, rr;
    gf_divrem(F, u1u2, g2, u3, rr);
    check(rr.empty(), errc::internal, "cantor: u3 division");
    // v3 = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + f)) / g mod u3
    GFPoly t = gf_add(F, gf_mul(F, gf_mul(F, s1, D1.u), D2.v), gf_mul(F, gf_mul(F, s2, D2.u), D1.v));
    t = gf_add(F, t, gf_mul(F, s3, gf_add(F, gf_mul(F, D1.v, D2.v), f)));
    GFPoly v3, rv;
    gf_divrem(F, t, g, v3, rv);
    check(rv.empty(), errc::internal, "cantor: v3 division");
    v3 = gf_mod(F, v3, u3);
    // reduction
    while (gf_deg(u3) > genus) {
        GFPoly num = gf_sub(F, f, gf_mul(F, v3, v3));
        GFPoly u4, r4;
        gf_divrem(F, num, u3, u4, r4);
        check(r4.empty(), errc::internal, "cantor: reduction division");
        u4 = gf_monic(F, u4);
        GFPoly v4 = gf_mod(F, [&] {
            GFPoly nv(v3.size());
            for (size_t i = 0; i < v3.size(); ++i) nv[i] = F.neg(v3[i]);
            return gf_trim(std::move(nv));
        }(), u4);
        u3 = u4;
        v3 = v4;
    }
    u3 = gf_monic(F, u3);
    return {u3, v3};
}

} // namespace

std::optional<PicOracle> pic_enumerate_oracle(const HyperCurve& c_in, size_t budget) {
    const GF& F = c_in.field();
    HyperCurve c = c_in;
    PicOracle out;
    if (!c.odd_degree_model) {
        // look for a rational Weierstrass point to move to infinity
        GF::El root = GF::zero;
        bool found = false;
        for (GF::El x : F.elements()) {
            if (F.is_zero(gf_eval(F, c.f, x))) {
                root = x;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
        // f*(t) = t^{2g+2} f(root + 1/t) = sum c_i (1 + root t)^i t^{2g+2-i}
        int d = gf_deg(c.f);
        GFPoly fstar;
        GFPoly lin{F.one(), root}; // 1 + root*t
        for (int i = 0; i <= d; ++i) {
            if (F.is_zero(c.f[static_cast<size_t>(i)])) continue;
            GFPoly term{c.f[static_cast<size_t>(i)]};
            for (int j = 0; j < i; ++j) term = gf_mul(F, term, lin);
            // shift by t^{d-i}
            GFPoly shifted(static_cast<size_t>(d - i), GF::zero);
            shifted.insert(shifted.end(), term.begin(), term.end());
            fstar = gf_add(F, fstar, gf_trim(std::move(shifted)));
        }
        c = make_curve(c.p, c.k, fstar);
        check(c.odd_degree_model, errc::internal, "transform did not produce an odd model");
        out.transformed = true;
    }
    int g = c.genus;
    // enumerate reduced Mumford pairs
    std::vector<Mumford> elems;
    std::vector<GF::El> consts = F.elements();
    for (int du = 0; du <= g; ++du) {
        std::vector<size_t> idx(static_cast<size_t>(du), 0);
        while (true) {
            GFPoly u(static_cast<size_t>(du) + 1, GF::zero);
            u[static_cast<size_t>(du)] = F.one();
            for (int i = 0; i < du; ++i) u[static_cast<size_t>(i)] = consts[idx[static_cast<size_t>(i)]];
            u = gf_trim(std::move(u));
            // all v with deg v < du and u | v^2 - f
            if (du == 0) {
                elems.push_back({GFPoly{F.one()}, GFPoly{}});
            } else {
                std::vector<size_t> vi(static_cast<size_t>(du), 0);
                while (true) {
                    GFPoly v(static_cast<size_t>(du), GF::zero);
                    for (int i = 0; i < du; ++i) v[static_cast<size_t>(i)] = consts[vi[static_cast<size_t>(i)]];
                    v = gf_trim(std::move(v));
                    GFPoly test = gf_mod(F, gf_sub(F, gf_mul(F, v, v), c.f), u);
                    if (test.empty()) elems.push_back({u, v});
                    size_t i = 0;
                    while (i < vi.size() && ++vi[i] == consts.size()) {
                        vi[i] = 0;
                        ++i;
                    }
                    if (i == vi.size()) break;
                }
            }
            check(elems.size() <= budget, errc::budget_exceeded, "pic oracle budget");
            if (du == 0) break;
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == consts.size()) {
                idx[i] = 0;
                ++i;
            }
            if (i == idx.size()) break;
        }
    }
    out.order = Int(static_cast<unsigned long>(elems.size()));
    // group structure via black-box composition
    std::map<std::string, Mumford> bykey;
    for (auto& e : elems) bykey[mum_key(e)] = e;
    check(bykey.size() == elems.size(), errc::internal, "duplicate reduced divisors");
    auto compose = [&](const std::string& a, const std::string& b) {
        Mumford r = cantor_compose(F, c.f, g, bykey.at(a), bykey.at(b));
        std::string k = mum_key(r);
        check(bykey.count(k) == 1, errc::internal, "cantor result not reduced-canonical");
        return k;
    };
    Mumford id{GFPoly{F.one()}, GFPoly{}};
    // generators: grow until the closure covers everything
    std::vector<std::string> gens;
    AbGroupStructure st;
    std::vector<std::string> pool;
    for (auto& [k, v] : bykey) pool.push_back(k);
    std::sort(pool.begin(), pool.end());
    while (true) {
        st = abgroup_structure(mum_key(id), gens, compose);
        if (st.order == out.order) break;
        std::set<std::string> have(st.elements.begin(), st.elements.end());
        bool added = false;
        for (auto& k : pool)
            if (!have.count(k)) {
                gens.push_back(k);
                added = true;
                break;
            }
        check(added, errc::internal, "pic oracle generation stalled");
    }
    out.divisors = st.divisors;
    out.torsion2 = st.torsion_count(Int(2));
    return out;
}

} // namespace ct2
