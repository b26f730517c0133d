#include "ffield/ffq.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "base/error.hpp"
#include "base/modpoly.hpp"

namespace ct2 {

namespace {

// Find a monic irreducible polynomial of degree m over F_p (deterministic
// scan; m <= 8, p <= 7 at desk scale).
FpPoly find_irreducible(long p, int m) {
    Int P(p);
    if (m == 1) return FpPoly{Int(0), Int(1)}; // x
    // scan constant-first tuples
    std::vector<long> c(static_cast<size_t>(m), 0);
    while (true) {
        FpPoly f(static_cast<size_t>(m) + 1);
        for (int i = 0; i < m; ++i) f[static_cast<size_t>(i)] = Int(c[static_cast<size_t>(i)]);
        f[static_cast<size_t>(m)] = 1;
        if (fp_is_irreducible(fp_trim(f), P)) return fp_trim(f);
        int i = 0;
        while (i < m && ++c[static_cast<size_t>(i)] == p) {
            c[static_cast<size_t>(i)] = 0;
            ++i;
        }
        check(i < m, errc::internal, "no irreducible polynomial found");
    }
}

} // namespace

GF::GF(long p, int m) : p_(p), m_(m) {
    check(p >= 3 && is_prime(Int(p)), errc::even_characteristic,
          "finite field: odd prime characteristic required");
    check(m >= 1, errc::internal, "GF: m >= 1");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        check(q_ <= 1 << 24, errc::budget_exceeded, "GF: field too large");
    }
    // polynomial basis arithmetic to build tables
    FpPoly mod = find_irreducible(p, m);
    auto mulp = [&](const std::vector<long>& a, const std::vector<long>& b) {
        std::vector<long> r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        // reduce by mod (monic)
        int dm = static_cast<int>(mod.size()) - 1;
        for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
            long f = r[static_cast<size_t>(k)];
            if (f == 0) continue;
            r[static_cast<size_t>(k)] = 0;
            for (int i = 0; i < dm; ++i) {
                long mi = mod[static_cast<size_t>(i)].get_si();
                r[static_cast<size_t>(k - dm + i)] =
                    ((r[static_cast<size_t>(k - dm + i)] - f * mi) % p + p * p) % p;
            }
        }
        r.resize(static_cast<size_t>(dm));
        return r;
    };
    auto key = [&](const std::vector<long>& a) {
        long k = 0;
        for (size_t i = a.size(); i-- > 0;) k = k * p + a[i];
        return k;
    };
    // find a generator: try elements in a deterministic order
    std::vector<long> gen;
    std::vector<long> elt(static_cast<size_t>(m), 0);
    std::vector<long> log_of(static_cast<size_t>(q_), -2);
    for (long attempt = 1; attempt < q_; ++attempt) {
        // candidate = digits of attempt
        std::vector<long> cand(static_cast<size_t>(m), 0);
        long a = attempt;
        for (int i = 0; i < m; ++i) {
            cand[static_cast<size_t>(i)] = a % p;
            a /= p;
        }
        // compute order by enumerating powers
        std::fill(log_of.begin(), log_of.end(), -2);
        std::vector<long> cur(static_cast<size_t>(m), 0);
        cur[0] = 1;
        long ord = 0;
        bool full = true;
        for (long e = 0; e < q_ - 1; ++e) {
            long k = key(cur);
            if (log_of[static_cast<size_t>(k)] != -2) {
                full = false;
                break;
            }
            log_of[static_cast<size_t>(k)] = e;
            cur = mulp(cur, cand);
            ++ord;
        }
        if (full && key(cur) == 1) {
            gen = cand;
            break;
        }
    }
    check(!gen.empty(), errc::internal, "GF: no generator found");
    // zech table: zech[k] = log(1 + g^k)
    zech_.assign(static_cast<size_t>(q_ - 1), zero);
    {
        std::vector<std::vector<long>> pows(static_cast<size_t>(q_ - 1));
        std::vector<long> cur(static_cast<size_t>(m), 0);
        cur[0] = 1;
        for (long e = 0; e < q_ - 1; ++e) {
            pows[static_cast<size_t>(e)] = cur;
            cur = mulp(cur, gen);
        }
        std::vector<long> log_by_key(static_cast<size_t>(q_), -1);
        for (long e = 0; e < q_ - 1; ++e) log_by_key[static_cast<size_t>(key(pows[static_cast<size_t>(e)]))] = e;
        for (long k = 0; k < q_ - 1; ++k) {
            std::vector<long> v = pows[static_cast<size_t>(k)];
            v[0] = (v[0] + 1) % p;
            long kk = key(v);
            zech_[static_cast<size_t>(k)] = (kk == 0) ? zero : static_cast<El>(log_by_key[static_cast<size_t>(kk)]);
        }
        // integer images
        int_image_.assign(static_cast<size_t>(p_), zero);
        for (long k = 1; k < p_; ++k) {
            std::vector<long> v(static_cast<size_t>(m), 0);
            v[0] = k;
            int_image_[static_cast<size_t>(k)] = static_cast<El>(log_by_key[static_cast<size_t>(key(v))]);
        }
        // minimal polynomial of the generator over F_p (degree exactly m,
        // since the generator spans the field multiplicatively)
        {
            FpMat M(static_cast<size_t>(m), static_cast<size_t>(m), Int(p_));
            std::vector<long> cur(static_cast<size_t>(m), 0);
            cur[0] = 1;
            std::vector<std::vector<long>> pws;
            for (int e = 0; e < m; ++e) {
                pws.push_back(cur);
                cur = mulp(cur, gen);
            }
            // solve x * P = g^m where rows of P are the powers
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) M.at(static_cast<size_t>(i), static_cast<size_t>(j)) = Int(pws[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            // augmented solve via rref on [P^T | g^m]
            FpMat A(static_cast<size_t>(m), static_cast<size_t>(m) + 1, Int(p_));
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) A.at(static_cast<size_t>(i), static_cast<size_t>(j)) = Int(pws[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                A.at(static_cast<size_t>(i), static_cast<size_t>(m)) = Int(cur[static_cast<size_t>(i)]);
            }
            fp_rref(A);
            gen_minpoly_.assign(static_cast<size_t>(m) + 1, 0);
            gen_minpoly_[static_cast<size_t>(m)] = 1;
            for (int i = 0; i < m; ++i) {
                // row i: x_i = A(i, m) (identity left block after rref)
                long ci = A.at(static_cast<size_t>(i), static_cast<size_t>(m)).get_si();
                gen_minpoly_[static_cast<size_t>(i)] = ((p_ - ci) % p_);
            }
        }
    }
}

long GF::embedding_exponent(const GF& bigger) const {
    check(bigger.p_ == p_ && bigger.m_ % m_ == 0, errc::internal, "GF embed: not an extension");
    long stride = (bigger.q_ - 1) / (q_ - 1);
    for (long k = 1; k < q_; ++k) {
        long e = k * stride % (bigger.q_ - 1);
        // evaluate the generator minpoly at g_B^e in the big field
        El acc = zero;
        El z = static_cast<El>(e);
        for (size_t i = gen_minpoly_.size(); i-- > 0;) {
            acc = bigger.add(bigger.mul(acc, z), bigger.from_int(gen_minpoly_[i]));
        }
        if (bigger.is_zero(acc)) return e;
    }
    fail(errc::internal, "GF embed: no conjugate root found");
}

GF::El GF::add(El a, El b) const {
    if (a < 0) return b;
    if (b < 0) return a;
    // g^a + g^b = g^a (1 + g^{b-a})
    long d = (b - a) % (q_ - 1);
    if (d < 0) d += q_ - 1;
    El z = zech_[static_cast<size_t>(d)];
    if (z < 0) return zero;
    return static_cast<El>((a + z) % (q_ - 1));
}

GF::El GF::neg(El a) const {
    if (a < 0) return a;
    if (p_ == 2) return a;
    long half = (q_ - 1) / 2;
    return static_cast<El>((a + half) % (q_ - 1));
}

GF::El GF::inv(El a) const {
    check(a >= 0, errc::internal, "GF inverse of zero");
    return static_cast<El>((q_ - 1 - a) % (q_ - 1));
}

GF::El GF::pow(El a, long e) const {
    if (a < 0) return (e == 0) ? one() : zero;
    long r = (static_cast<long>(a) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return static_cast<El>(r);
}

GF::El GF::from_int(long k) const {
    long r = k % p_;
    if (r < 0) r += p_;
    return int_image_[static_cast<size_t>(r)];
}

std::vector<GF::El> GF::elements() const {
    std::vector<El> out{zero};
    for (long e = 0; e < q_ - 1; ++e) out.push_back(static_cast<El>(e));
    return out;
}

GFPoly gf_trim(GFPoly f) {
    while (!f.empty() && f.back() < 0) f.pop_back();
    return f;
}

int gf_deg(const GFPoly& f) { return static_cast<int>(f.size()) - 1; }

GFPoly gf_add(const GF& F, const GFPoly& a, const GFPoly& b) {
    GFPoly r(std::max(a.size(), b.size()), GF::zero);
    for (size_t i = 0; i < r.size(); ++i) {
        GF::El x = i < a.size() ? a[i] : GF::zero;
        GF::El y = i < b.size() ? b[i] : GF::zero;
        r[i] = F.add(x, y);
    }
    return gf_trim(std::move(r));
}

GFPoly gf_sub(const GF& F, const GFPoly& a, const GFPoly& b) {
    GFPoly nb(b.size());
    for (size_t i = 0; i < b.size(); ++i) nb[i] = F.neg(b[i]);
    return gf_add(F, a, nb);
}

GFPoly gf_mul(const GF& F, const GFPoly& a, const GFPoly& b) {
    if (a.empty() || b.empty()) return {};
    GFPoly r(a.size() + b.size() - 1, GF::zero);
    for (size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (F.is_zero(b[j])) continue;
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    return gf_trim(std::move(r));
}

GFPoly gf_mul_scalar(const GF& F, const GFPoly& a, GF::El c) {
    if (F.is_zero(c)) return {};
    GFPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return gf_trim(std::move(r));
}

void gf_divrem(const GF& F, const GFPoly& a, const GFPoly& b, GFPoly& q, GFPoly& r) {
    check(!b.empty(), errc::internal, "gf_divrem by zero");
    r = a;
    int db = gf_deg(b);
    GF::El binv = F.inv(b.back());
    q.assign(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, GF::zero);
    while (gf_deg(r) >= db) {
        int k = gf_deg(r) - db;
        GF::El f = F.mul(r.back(), binv);
        q[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(k + i);
            r[idx] = F.sub(r[idx], F.mul(f, b[static_cast<size_t>(i)]));
        }
        r = gf_trim(std::move(r));
    }
    q = gf_trim(std::move(q));
}

GFPoly gf_mod(const GF& F, const GFPoly& a, const GFPoly& m) {
    GFPoly q, r;
    gf_divrem(F, a, m, q, r);
    return r;
}

GFPoly gf_monic(const GF& F, const GFPoly& a) {
    if (a.empty()) return a;
    return gf_mul_scalar(F, a, F.inv(a.back()));
}

GFPoly gf_gcd(const GF& F, GFPoly a, GFPoly b) {
    while (!b.empty()) {
        GFPoly r = gf_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return gf_monic(F, a);
}

GFPoly gf_gcdext(const GF& F, const GFPoly& a, const GFPoly& b, GFPoly& s, GFPoly& t) {
    GFPoly r0 = a, r1 = b;
    GFPoly s0{F.one()}, s1{}, t0{}, t1{F.one()};
    while (!r1.empty()) {
        GFPoly q, r;
        gf_divrem(F, r0, r1, q, r);
        GFPoly s2 = gf_sub(F, s0, gf_mul(F, q, s1));
        GFPoly t2 = gf_sub(F, t0, gf_mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // normalize monic
    if (!r0.empty()) {
        GF::El c = F.inv(r0.back());
        r0 = gf_mul_scalar(F, r0, c);
        s0 = gf_mul_scalar(F, s0, c);
        t0 = gf_mul_scalar(F, t0, c);
    }
    s = s0;
    t = t0;
    return r0;
}

GFPoly gf_powmod(const GF& F, const GFPoly& a, long e, const GFPoly& m) {
    GFPoly base = gf_mod(F, a, m), acc{F.one()};
    while (e > 0) {
        if (e & 1) acc = gf_mod(F, gf_mul(F, acc, base), m);
        base = gf_mod(F, gf_mul(F, base, base), m);
        e >>= 1;
    }
    return acc;
}

GFPoly gf_derivative(const GF& F, const GFPoly& a) {
    if (a.size() <= 1) return {};
    GFPoly r(a.size() - 1, GF::zero);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = F.mul(a[i], F.from_int(static_cast<long>(i)));
    return gf_trim(std::move(r));
}

GF::El gf_eval(const GF& F, const GFPoly& a, GF::El x) {
    GF::El r = GF::zero;
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

bool gf_is_squarefree(const GF& F, const GFPoly& f) {
    GFPoly d = gf_derivative(F, f);
    if (d.empty()) return false;
    return gf_deg(gf_gcd(F, f, d)) == 0;
}

std::vector<int> gf_factor_degrees(const GF& F, const GFPoly& f_in) {
    GFPoly f = gf_monic(F, f_in);
    check(gf_is_squarefree(F, f), errc::internal, "gf_factor_degrees: not squarefree");
    std::vector<int> out;
    GFPoly x{GF::zero, F.one()};
    GFPoly h = gf_mod(F, x, f);
    int d = 0;
    while (gf_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = gf_powmod(F, h, F.q(), f); // careful: x^(q^d) progressively
        GFPoly g = gf_gcd(F, gf_sub(F, h, gf_mod(F, x, f)), f);
        if (gf_deg(g) > 0) {
            for (int i = 0; i < gf_deg(g) / d; ++i) out.push_back(d);
            GFPoly q, r;
            gf_divrem(F, f, g, q, r);
            f = q;
            h = gf_mod(F, h, f);
        }
    }
    if (gf_deg(f) > 0) out.push_back(gf_deg(f));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gf_edf(const GF& F, const GFPoly& f, int d, std::mt19937_64& rng, std::vector<GFPoly>& out) {
    int n = gf_deg(f);
    if (n == d) {
        out.push_back(gf_monic(F, f));
        return;
    }
    GFPoly g;
    while (true) {
        GFPoly r(static_cast<size_t>(n), GF::zero);
        for (auto& c : r) {
            long v = static_cast<long>(rng() % static_cast<unsigned long>(F.q()));
            c = (v == 0) ? GF::zero : static_cast<GF::El>(v - 1);
        }
        r = gf_trim(std::move(r));
        if (gf_deg(r) < 1) continue;
        long e = 1;
        for (int i = 0; i < d; ++i) e *= F.q();
        e = (e - 1) / 2;
        GFPoly h = gf_powmod(F, r, e, f);
        g = gf_gcd(F, gf_sub(F, h, GFPoly{F.one()}), f);
        if (gf_deg(g) > 0 && gf_deg(g) < n) break;
    }
    GFPoly q, rr;
    gf_divrem(F, f, g, q, rr);
    gf_edf(F, g, d, rng, out);
    gf_edf(F, q, d, rng, out);
}

} // namespace

std::vector<GFFactor> gf_factor(const GF& F, const GFPoly& f_in, uint64_t seed) {
    std::vector<GFFactor> out;
    GFPoly f = gf_monic(F, gf_trim(f_in));
    check(gf_deg(f) >= 1, errc::internal, "gf_factor: degree < 1");
    std::mt19937_64 rng(seed);
    // squarefree split (separable inputs expected; handle multiplicities by gcd peeling)
    GFPoly d = gf_derivative(F, f);
    GFPoly g = d.empty() ? f : gf_gcd(F, f, d);
    if (gf_deg(g) > 0) {
        // peel: factor squarefree part, then divide multiplicities out
        GFPoly q, r;
        gf_divrem(F, f, g, q, r);
        auto base = gf_factor(F, q, seed);
        GFPoly rest = f;
        for (auto& fac : base) {
            int mult = 0;
            while (true) {
                GFPoly qq, rr;
                gf_divrem(F, rest, fac.poly, qq, rr);
                if (!rr.empty()) break;
                rest = qq;
                ++mult;
            }
            out.push_back({fac.poly, mult});
        }
        check(gf_deg(rest) == 0, errc::internal, "gf_factor: peel incomplete");
        return out;
    }
    // distinct degree then equal degree
    GFPoly x{GF::zero, F.one()};
    GFPoly h = gf_mod(F, x, f);
    GFPoly rem = f;
    int dd = 0;
    while (gf_deg(rem) >= 2 * (dd + 1)) {
        ++dd;
        h = gf_powmod(F, h, F.q(), rem);
        GFPoly gg = gf_gcd(F, gf_sub(F, h, gf_mod(F, x, rem)), rem);
        if (gf_deg(gg) > 0) {
            std::vector<GFPoly> irr;
            gf_edf(F, gg, dd, rng, irr);
            for (auto& pp : irr) out.push_back({pp, 1});
            GFPoly q, r;
            gf_divrem(F, rem, gg, q, r);
            rem = q;
            h = gf_mod(F, h, rem);
        }
    }
    if (gf_deg(rem) > 0) out.push_back({gf_monic(F, rem), 1});
    std::sort(out.begin(), out.end(), [](const GFFactor& a, const GFFactor& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        return a.poly < b.poly;
    });
    return out;
}

std::string gf_poly_str(const GF& F, const GFPoly& f) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) os << ",";
        os << (F.is_zero(f[i]) ? -1 : f[i]);
    }
    os << "]";
    return os.str();
}

} // namespace ct2
