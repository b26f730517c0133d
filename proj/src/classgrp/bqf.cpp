#include "classgrp/bqf.hpp"

#include <algorithm>
#include <set>

#include "base/error.hpp"

namespace ct2 {

namespace {

// Elements of the order O_D, stored as (x, y) meaning (x + y sqrt(D))/2 with
// x == y*D mod 2.
struct OdElem {
    Int x, y;
};

OdElem od_mul(const OdElem& u, const OdElem& v, const Int& D) {
    return {divexact(u.x * v.x + u.y * v.y * D, Int(2)), divexact(u.x * v.y + u.y * v.x, Int(2))};
}

// A full module in O_D with Z-basis (alpha, beta); norm form computed from an
// oriented basis.
struct OdModule {
    OdElem alpha, beta;
};

// HNF basis of the module generated by the given elements; basis returned as
// alpha = p + q*w, beta = r*w in O-coordinates where w = (D + sqrt D)/2.
OdModule od_module_from_gens(const std::vector<OdElem>& gens, const Int& D) {
    // O-coords of (x + y sqrt D)/2: c2 = y, c1 = (x - y*D)/2
    ZMat rows(gens.size(), 2);
    for (size_t i = 0; i < gens.size(); ++i) {
        rows.at(i, 0) = divexact(gens[i].x - gens[i].y * D, Int(2));
        rows.at(i, 1) = gens[i].y;
    }
    ZMat H = hnf(rows);
    check(H.rows == 2, errc::internal, "od module not full rank");
    // H = [[p, q], [0, r]] with pivots positive
    Int p = H.at(0, 0), q = H.at(0, 1), r = H.at(1, 1);
    check(H.at(1, 0) == 0, errc::internal, "od module HNF shape");
    // back to (x, y): c1 + c2*w = c1 + c2*(D + sqrt D)/2 = (2 c1 + c2 D + c2 sqrt D)/2
    OdModule m;
    m.alpha = {2 * p + q * D, q};
    m.beta = {r * D, r};
    return m;
}

Int od_norm_num(const OdElem& u, const Int& D) {
    // 4*N(u) = x^2 - y^2 D; always divisible by 4
    return divexact(u.x * u.x - u.y * u.y * D, Int(4));
}

Int od_trace_cross(const OdElem& u, const OdElem& v, const Int& D) {
    // Tr(u * conj(v)) = (x1 x2 - y1 y2 D)/2 * ... compute 2*Re(u vbar):
    // u vbar = ((x1 + y1 s)(x2 - y2 s))/4, s = sqrt D
    // Tr = (x1 x2 - y1 y2 D)/2
    return divexact(u.x * v.x - u.y * v.y * D, Int(2));
}

// Orientation sign of (u, v): sign of (v_y * u_x - u_y * v_x)... derived:
// (u vbar - ubar v)/sqrt(D) = (y1 x2 - x1 y2)/2.
int od_orientation(const OdElem& u, const OdElem& v) {
    Int t = u.y * v.x - u.x * v.y;
    return t > 0 ? 1 : (t < 0 ? -1 : 0);
}

QForm form_of_module(const OdModule& m, const Int& D) {
    OdElem a = m.alpha, b = m.beta;
    int ori = od_orientation(a, b);
    check(ori != 0, errc::internal, "degenerate module basis");
    if (ori < 0) {
        b.x = -b.x;
        b.y = -b.y;
    }
    Int na = od_norm_num(a, D);
    Int nb = od_norm_num(b, D);
    Int cross = od_trace_cross(a, b, D);
    // module norm = |det of O-coords| = content scale; Q = (na, cross, nb)/Nm
    Int c1a = divexact(a.x - a.y * D, Int(2));
    Int c1b = divexact(b.x - b.y * D, Int(2));
    Int nm = abs(c1a * b.y - c1b * a.y);
    check(nm != 0, errc::internal, "module norm zero");
    QForm f{divexact(na, nm), divexact(cross, nm), divexact(nb, nm)};
    check(f.disc() == D, errc::internal, "form_of_module: wrong discriminant");
    return f;
}

OdModule module_of_form(const QForm& f, const Int& D) {
    // M = [a, (-b + sqrt D)/2]
    OdModule m;
    m.alpha = {2 * f.a, Int(0)};
    m.beta = {-f.b, Int(1)};
    return m;
}

} // namespace

QForm FormClassGroup::reduce_neg(QForm f) const {
    check(f.a > 0, errc::internal, "reduce_neg: nonpositive a");
    while (true) {
        // normalize: -a < b <= a
        if (!(f.b > -f.a && f.b <= f.a)) {
            Int twoa = 2 * f.a;
            Int q = fdiv_q(f.b + f.a, twoa);
            f.b -= q * twoa;
            if (f.b == -f.a) f.b = f.a; // same c, canonical end of range
            f.c = divexact(f.b * f.b - D_, 4 * f.a);
        }
        if (f.a > f.c) {
            // rho step: (a,b,c) -> (c,-b,a), then renormalize
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

bool FormClassGroup::is_reduced_pos(const QForm& f) const {
    // 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b
    if (f.b <= 0) return false;
    Int b2 = f.b * f.b;
    if (b2 >= D_) return false;
    Int twoa = 2 * abs(f.a);
    // (sqrt D - b)^2 < (2a)^2 require 2a > sqrt D - b: both sides may be
    // negative-free: sqrt D > b here so sqrt D - b > 0
    // 2|a| > sqrt D - b  <=>  (2|a| + b)^2 > D
    if ((twoa + f.b) * (twoa + f.b) <= D_) return false;
    // 2|a| < sqrt D + b  <=>  (2|a| - b)^2 < D when 2|a| > b, else always true
    if (twoa > f.b && (twoa - f.b) * (twoa - f.b) >= D_) return false;
    return true;
}

QForm FormClassGroup::rho(const QForm& f) const {
    // rho(a,b,c) = (c, b', (b'^2 - D)/(4c)) with b' = -b mod 2c in the window
    Int c = f.c;
    Int twoc = 2 * abs(c);
    Int s = isqrt(D_); // floor
    // window: if |c| > sqrt D: -|c| < b' <= |c| ; else sqrt D - 2|c| < b' < sqrt D
    Int bp;
    if (abs(c) > s) {
        bp = fdiv_r(-f.b, twoc);
        if (bp > abs(c)) bp -= twoc;
    } else {
        // largest b' < sqrt D with b' = -b mod 2c: b' in (s - 2|c|, s]
        bp = fdiv_r(-f.b, twoc);
        // lift into (s - 2|c|, s]
        Int k = fdiv_q(s - bp, twoc);
        bp += k * twoc;
        if (bp > s) bp -= twoc;
        // exact boundary: b' = floor(sqrt D) is fine (b' < sqrt D since D not square)
    }
    QForm g{c, bp, divexact(bp * bp - D_, 4 * c)};
    return g;
}

FormClassGroup::FormClassGroup(const Int& D) : D_(D) {
    bool fundamental = false;
    {
        // D = 1 mod 4 squarefree, or D = 4m with m squarefree, m = 2 or 3 mod 4
        if (fdiv_r(D, Int(4)) == 1) {
            fundamental = true;
            for (const auto& [p, e] : factorize(D))
                if (e >= 2) fundamental = false;
        } else if (D % 4 == 0) {
            Int m = divexact(D, Int(4));
            Int m4 = fdiv_r(m, Int(4));
            if (m4 == 2 || m4 == 3) {
                fundamental = true;
                for (const auto& [p, e] : factorize(m))
                    if (e >= 2) fundamental = false;
            }
        }
    }
    check(fundamental, errc::internal, "FormClassGroup: discriminant not fundamental: " + D.get_str());
    check(D_ != 0 && (D_ < 0 || !is_perfect_square(D_)), errc::internal,
          "FormClassGroup: bad discriminant");

    std::vector<QForm> reduced;
    if (D_ < 0) {
        // all reduced positive definite forms
        Int alim = isqrt(fdiv_q(-D_, Int(3)));
        for (Int a = 1; a <= alim; ++a) {
            for (Int b = (D_ % 2 == 0) ? Int(0) : Int(1); b <= a; b += 2) {
                Int num = b * b - D_;
                if (num % (4 * a) != 0) continue;
                Int c = divexact(num, 4 * a);
                if (c < a) continue;
                if (gcd(gcd(a, b), c) != 1) continue;
                reduced.push_back({a, b, c});
                if (b != 0 && a != b && a != c) reduced.push_back({a, -b, c});
            }
        }
        classes_ = reduced;
    } else {
        // all reduced indefinite forms, partitioned into rho-cycles
        Int s = isqrt(D_);
        for (Int b = (D_ % 2 == 0) ? Int(2) : Int(1); b <= s; b += 2) {
            Int num = b * b - D_; // negative
            // 4a | b^2 - D, a in both signs with (sqrt D - b)/2 < |a| < (sqrt D + b)/2
            for (Int aa = 1; 2 * aa < s + b + 2; ++aa) {
                if ((2 * aa + b) * (2 * aa + b) <= D_) continue; // |a| too small
                if (2 * aa > b && (2 * aa - b) * (2 * aa - b) >= D_) break; // |a| too big
                if (num % (4 * aa) != 0) continue;
                for (int sign : {1, -1}) {
                    Int a = sign * aa;
                    Int c = divexact(num, 4 * a);
                    if (gcd(gcd(a, b), c) != 1) continue;
                    QForm f{a, b, c};
                    if (is_reduced_pos(f)) reduced.push_back(f);
                }
            }
        }
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        // partition into rho-cycles
        std::map<std::string, bool> used;
        for (const auto& f : reduced) used[f.key()] = false;
        for (const auto& f : reduced) {
            if (used[f.key()]) continue;
            // walk the cycle
            std::vector<QForm> cyc;
            QForm cur = f;
            do {
                cyc.push_back(cur);
                used[cur.key()] = true;
                cur = rho(cur);
                check(is_reduced_pos(cur), errc::internal, "rho left the reduced set");
            } while (!(cur == f));
            QForm rep = *std::min_element(cyc.begin(), cyc.end());
            for (const auto& g : cyc) cycle_canon_[g.key()] = rep;
            classes_.push_back(rep);
        }
    }
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());

    // group structure: grow a generating set until the closure covers all
    // classes
    std::vector<std::string> gens;
    std::map<std::string, QForm> bykey;
    for (const auto& f : classes_) bykey[f.key()] = f;
    auto composer = [this, &bykey](const std::string& xa, const std::string& xb) {
        const QForm& fa = bykey.at(xa);
        const QForm& fb = bykey.at(xb);
        return compose(fa, fb).key();
    };
    std::string idkey = canonical(principal()).key();
    AbGroupStructure st;
    std::vector<QForm> pool = classes_;
    std::sort(pool.begin(), pool.end()); // deterministic candidate order
    while (true) {
        st = abgroup_structure(idkey, gens, composer);
        if (st.order == class_number()) break;
        // add a class not yet generated
        std::set<std::string> have(st.elements.begin(), st.elements.end());
        bool added = false;
        for (const auto& f : pool) {
            if (!have.count(f.key())) {
                gens.push_back(f.key());
                added = true;
                break;
            }
        }
        check(added, errc::internal, "form group generation stalled");
    }
    structure_ = st;
}

QForm FormClassGroup::principal() const {
    if (D_ % 2 == 0) return {Int(1), Int(0), divexact(-D_, Int(4))};
    return {Int(1), Int(1), divexact(1 - D_, Int(4))};
}

QForm FormClassGroup::canonical(const QForm& f) const {
    check(f.disc() == D_, errc::internal, "canonical: wrong discriminant");
    if (D_ < 0) {
        QForm g = f;
        if (g.a < 0) fail(errc::internal, "canonical: negative definite form");
        return reduce_neg(g);
    }
    // reduce: apply rho until reduced, then look up the cycle representative
    QForm g = f;
    int guard = 0;
    while (!is_reduced_pos(g)) {
        g = rho(g);
        check(++guard < 100000, errc::internal, "pos reduction runaway");
    }
    auto it = cycle_canon_.find(g.key());
    check(it != cycle_canon_.end(), errc::internal, "reduced form missing from cycle table");
    return it->second;
}

QForm FormClassGroup::compose(const QForm& f, const QForm& g) const {
    OdModule mf = module_of_form(f, D_);
    OdModule mg = module_of_form(g, D_);
    std::vector<OdElem> gens{od_mul(mf.alpha, mg.alpha, D_), od_mul(mf.alpha, mg.beta, D_),
                             od_mul(mf.beta, mg.alpha, D_), od_mul(mf.beta, mg.beta, D_)};
    OdModule prod = od_module_from_gens(gens, D_);
    QForm raw = form_of_module(prod, D_);
    // scale: form_of_module divides by the module norm; the product module's
    // form may be imprimitive only by the unit content (it is primitive for
    // fundamental D).
    return canonical(raw);
}

QForm FormClassGroup::inverse(const QForm& f) const { return canonical({f.a, -f.b, f.c}); }

QForm form_of_ideal(const NumberField& K, const FracIdeal& I) {
    check(K.degree() == 2, errc::internal, "form_of_ideal: not quadratic");
    Int D = K.disc();
    // integral version (same class scaling by rationals does not change the form)
    // basis rows of num over integral basis (1, theta); convert to O_D rep.
    // theta satisfies x^2 - x - (D-1)/4 (D odd) or x^2 - D/4 (D = 0 mod 4).
    // In both cases theta = (t + sqrt D)/2 with t = 1 (D odd), 0 (D even).
    Int t = (fdiv_r(D, Int(4)) == 1) ? Int(1) : Int(0);
    std::vector<OdElem> gens;
    for (size_t i = 0; i < 2; ++i) {
        Int u = I.num.at(i, 0), v = I.num.at(i, 1);
        // u + v*theta = u + v(t + sqrt D)/2 = ((2u + vt) + v sqrt D)/2
        gens.push_back({2 * u + v * t, v});
    }
    OdModule m = od_module_from_gens(gens, D);
    return form_of_module(m, D);
}

QuadraticClassData quadratic_class_data(const NumberField& K) {
    check(K.degree() == 2, errc::internal, "quadratic_class_data: not quadratic");
    Int D = K.disc();
    FormClassGroup G(D);
    QuadraticClassData out;
    out.h_narrow = G.class_number();
    out.narrow_divisors = G.structure().divisors;
    out.h2_narrow = G.h2();
    if (D < 0) {
        out.h_wide = out.h_narrow;
        out.wide_divisors = out.narrow_divisors;
        out.h2_wide = out.h2_narrow;
        return out;
    }
    // wide group = narrow / <class of (sqrt D)>
    // sqrt D = 2*theta - t with t as in form_of_ideal
    Int t = (fdiv_r(D, Int(4)) == 1) ? Int(1) : Int(0);
    Elem sqrtD = K.sub(K.mul_int(K.theta(), Int(2)), K.from_int(t));
    QForm tform = G.canonical(form_of_ideal(K, ideal_from_elem(K, sqrtD)));
    // coset structure via abgroup on coset keys
    auto coset_key = [&](const QForm& f) {
        QForm other = G.compose(f, tform);
        return std::min(f.key(), other.key());
    };
    std::map<std::string, QForm> bykey;
    for (const auto& f : G.classes()) bykey[f.key()] = f;
    auto composer = [&](const std::string& xa, const std::string& xb) {
        // pick representatives (the stored key is itself a class key)
        return coset_key(G.compose(bykey.at(xa), bykey.at(xb)));
    };
    // generators: coset keys of all classes
    std::vector<std::string> gens;
    {
        std::set<std::string> seen;
        for (const auto& f : G.classes()) {
            std::string ck = coset_key(f);
            if (seen.insert(ck).second) gens.push_back(ck);
        }
    }
    auto st = abgroup_structure(coset_key(G.canonical(G.principal())), gens, composer);
    out.h_wide = st.order;
    out.wide_divisors = st.divisors;
    out.h2_wide = st.torsion_count(Int(2));
    return out;
}

} // namespace ct2
