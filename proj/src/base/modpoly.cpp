#include "base/modpoly.hpp"

#include <algorithm>
#include <random>

#include "base/error.hpp"

namespace ct2 {

FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FpPoly fp_reduce(const ZPoly& f, const Int& p) {
    FpPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) r[i] = fdiv_r(f.c[i], p);
    return fp_trim(std::move(r));
}

ZPoly fp_lift(const FpPoly& f) { return ZPoly(std::vector<Int>(f.begin(), f.end())); }

int fp_deg(const FpPoly& f) { return f.empty() ? -1 : static_cast<int>(f.size()) - 1; }

bool fp_eq(const FpPoly& a, const FpPoly& b) { return a == b; }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const Int& p) {
    FpPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    for (auto& x : r) x = fdiv_r(x, p);
    return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Int& p) {
    FpPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& x : r) x = fdiv_r(x, p);
    return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x = fdiv_r(x, p);
    return fp_trim(std::move(r));
}

void fp_divrem(const FpPoly& a, const FpPoly& b, const Int& p, FpPoly& q, FpPoly& r) {
    check(!b.empty(), errc::internal, "fp_divrem by zero");
    r = a;
    int db = fp_deg(b);
    Int binv = invmod(b.back(), p);
    check(binv != 0, errc::internal, "fp_divrem: lead not invertible");
    q.assign(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, Int(0));
    while (fp_deg(r) >= db) {
        int k = fp_deg(r) - db;
        Int f = r.back() * binv % p;
        q[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(k + i);
            r[idx] = fdiv_r(r[idx] - f * b[static_cast<size_t>(i)], p);
        }
        r = fp_trim(std::move(r));
    }
    q = fp_trim(std::move(q));
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m, const Int& p) {
    FpPoly q, r;
    fp_divrem(a, m, p, q, r);
    return r;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const Int& p) {
    return fp_mod(fp_mul(a, b, p), m, p);
}

FpPoly fp_monic(const FpPoly& a, const Int& p) {
    if (a.empty()) return a;
    Int inv = invmod(a.back(), p);
    FpPoly r = a;
    for (auto& x : r) x = x * inv % p;
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_powmod(const FpPoly& a, const Int& e_in, const FpPoly& m, const Int& p) {
    FpPoly base = fp_mod(a, m, p);
    FpPoly result{Int(1)};
    Int e = e_in;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = fp_mulmod(result, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_derivative(const FpPoly& a, const Int& p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = fdiv_r(Int(static_cast<long>(i)) * a[i], p);
    return fp_trim(std::move(r));
}

bool FpFactor::operator<(const FpFactor& o) const {
    if (poly.size() != o.poly.size()) return poly.size() < o.poly.size();
    for (size_t i = poly.size(); i-- > 0;)
        if (poly[i] != o.poly[i]) return poly[i] < o.poly[i];
    return multiplicity < o.multiplicity;
}

namespace {

// Squarefree decomposition over F_p: pieces with multiplicities, handling the
// p-th power collapse f(x) = g(x^p) = g(x)^p.
void fp_squarefree(const FpPoly& f_in, const Int& p, unsigned mult_scale,
                   std::vector<std::pair<FpPoly, unsigned>>& out) {
    FpPoly f = fp_monic(f_in, p);
    if (fp_deg(f) <= 0) return;
    FpPoly df = fp_derivative(f, p);
    if (df.empty()) {
        // f = g(x^p); p fits desk scale so indexing by p is fine only when p
        // is small — use exact stride instead.
        check(mpz_fits_ulong_p(p.get_mpz_t()), errc::budget_exceeded, "squarefree: p too large for x^p collapse");
        unsigned long pl = mpz_get_ui(p.get_mpz_t());
        FpPoly g((f.size() - 1) / pl + 1, Int(0));
        for (size_t i = 0; i < g.size(); ++i) g[i] = f[i * pl];
        fp_squarefree(g, p, mult_scale * static_cast<unsigned>(pl), out);
        return;
    }
    FpPoly a = fp_gcd(f, df, p);
    FpPoly b; // f / a
    {
        FpPoly q, r;
        fp_divrem(f, a, p, q, r);
        check(r.empty(), errc::internal, "squarefree: gcd division");
        b = q;
    }
    unsigned i = 1;
    while (fp_deg(b) > 0) {
        FpPoly c = fp_gcd(b, a, p);
        FpPoly piece;
        {
            FpPoly q, r;
            fp_divrem(b, c, p, q, r);
            piece = q;
        }
        if (fp_deg(piece) > 0) out.emplace_back(fp_monic(piece, p), i * mult_scale);
        {
            FpPoly q, r;
            fp_divrem(a, c, p, q, r);
            a = q;
        }
        b = c;
        ++i;
    }
    if (fp_deg(a) > 0) fp_squarefree(a, p, mult_scale, out); // leftover p-th powers
}

// Distinct-degree: f squarefree monic -> list of (product of irreducibles of
// degree d, d).
std::vector<std::pair<FpPoly, int>> fp_ddf(const FpPoly& f_in, const Int& p) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly f = f_in;
    FpPoly x{Int(0), Int(1)};
    FpPoly h = fp_mod(x, f, p); // x^(p^d) progressively
    int d = 0;
    while (fp_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, p, f, p);
        FpPoly g = fp_gcd(fp_sub(h, fp_mod(x, f, p), p), f, p);
        if (fp_deg(g) > 0) {
            out.emplace_back(g, d);
            FpPoly q, r;
            fp_divrem(f, g, p, q, r);
            f = q;
            h = fp_mod(h, f, p);
        }
    }
    if (fp_deg(f) > 0) out.emplace_back(f, fp_deg(f));
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), f = product of irreducibles all
// of degree d.
void fp_edf(const FpPoly& f, int d, const Int& p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    int n = fp_deg(f);
    if (n == d) {
        out.push_back(fp_monic(f, p));
        return;
    }
    FpPoly g;
    while (true) {
        // random poly of degree < n
        FpPoly r(static_cast<size_t>(n), Int(0));
        for (auto& c : r) {
            if (mpz_fits_ulong_p(p.get_mpz_t())) {
                std::uniform_int_distribution<unsigned long> dist(0, mpz_get_ui(p.get_mpz_t()) - 1);
                c = Int(dist(rng));
            } else {
                // large p: random 64-bit then reduce
                c = fdiv_r(Int(static_cast<unsigned long>(rng())), p);
            }
        }
        r = fp_trim(std::move(r));
        if (fp_deg(r) < 1) continue;
        if (p == 2) {
            // trace map: r + r^2 + r^4 + ... (d terms) over F_2
            FpPoly t = fp_mod(r, f, p), acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_mulmod(t, t, f, p);
                acc = fp_add(acc, t, p);
            }
            g = fp_gcd(acc, f, p);
        } else {
            Int e = (pow_ui(p, static_cast<unsigned long>(d)) - 1) / 2;
            FpPoly h = fp_powmod(r, e, f, p);
            g = fp_gcd(fp_sub(h, FpPoly{Int(1)}, p), f, p);
        }
        if (fp_deg(g) > 0 && fp_deg(g) < n) break;
    }
    FpPoly q, rr;
    fp_divrem(f, g, p, q, rr);
    fp_edf(g, d, p, rng, out);
    fp_edf(q, d, p, rng, out);
}

} // namespace

std::vector<FpFactor> fp_factor(const FpPoly& f_in, const Int& p, uint64_t rng_seed) {
    std::vector<FpFactor> out;
    FpPoly f = fp_trim(f_in);
    check(fp_deg(f) >= 1, errc::internal, "fp_factor: degree < 1");
    std::vector<std::pair<FpPoly, unsigned>> sqf;
    fp_squarefree(f, p, 1, sqf);
    std::mt19937_64 rng(rng_seed);
    for (auto& [g, mult] : sqf) {
        for (auto& [h, d] : fp_ddf(g, p)) {
            std::vector<FpPoly> irr;
            fp_edf(h, d, p, rng, irr);
            for (auto& q : irr) out.push_back({q, mult});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> fp_factor_degrees_squarefree(const FpPoly& f_in, const Int& p) {
    std::vector<int> out;
    for (auto& [h, d] : fp_ddf(fp_monic(f_in, p), p)) {
        int count = fp_deg(h) / d;
        for (int i = 0; i < count; ++i) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool fp_is_irreducible(const FpPoly& f, const Int& p) {
    int n = fp_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    FpPoly df = fp_derivative(f, p);
    if (df.empty()) return false;
    if (fp_deg(fp_gcd(f, df, p)) > 0) return false;
    auto degs = fp_factor_degrees_squarefree(fp_monic(f, p), p);
    return degs.size() == 1 && degs[0] == n;
}

std::vector<Int> fp_roots(const FpPoly& f_in, const Int& p, uint64_t rng_seed) {
    std::vector<Int> roots;
    FpPoly f = fp_monic(fp_trim(f_in), p);
    if (fp_deg(f) < 1) return roots;
    // Split part: gcd(f, x^p - x).
    FpPoly x{Int(0), Int(1)};
    FpPoly xp = fp_powmod(x, p, f, p);
    FpPoly split = fp_gcd(fp_sub(xp, fp_mod(x, f, p), p), f, p);
    if (fp_deg(split) < 1) return roots;
    // Factor the split part into linears via EDF with d=1.
    std::mt19937_64 rng(rng_seed);
    std::vector<FpPoly> lin;
    if (fp_deg(split) >= 1) fp_edf(split, 1, p, rng, lin);
    for (auto& l : lin) {
        // l = x + c => root = -c
        roots.push_back(fdiv_r(-l[0], p));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

size_t fp_rref(FpMat& m, std::vector<size_t>* pivots) {
    size_t r = 0;
    if (pivots) pivots->clear();
    for (size_t j = 0; j < m.cols && r < m.rows; ++j) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, j) == 0) ++piv;
        if (piv == m.rows) continue;
        for (size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
        Int inv = invmod(m.at(r, j), m.p);
        for (size_t k = 0; k < m.cols; ++k) m.at(r, k) = m.at(r, k) * inv % m.p;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, j) == 0) continue;
            Int f = m.at(i, j);
            for (size_t k = 0; k < m.cols; ++k) m.at(i, k) = fdiv_r(m.at(i, k) - f * m.at(r, k), m.p);
        }
        if (pivots) pivots->push_back(j);
        ++r;
    }
    return r;
}

FpMat fp_left_kernel(const FpMat& A) {
    // Solve x*A = 0: row-reduce A^T-augmented approach. Work on A with an
    // identity appended on the left of each row (track transforms).
    FpMat M(A.rows, A.cols + A.rows, A.p);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols + i) = 1;
    }
    // Eliminate on the first A.cols columns only.
    size_t r = 0;
    for (size_t j = 0; j < A.cols && r < M.rows; ++j) {
        size_t piv = r;
        while (piv < M.rows && M.at(piv, j) == 0) ++piv;
        if (piv == M.rows) continue;
        for (size_t k = 0; k < M.cols; ++k) std::swap(M.at(piv, k), M.at(r, k));
        Int inv = invmod(M.at(r, j), M.p);
        for (size_t k = 0; k < M.cols; ++k) M.at(r, k) = M.at(r, k) * inv % M.p;
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, j) == 0) continue;
            Int f = M.at(i, j);
            for (size_t k = 0; k < M.cols; ++k) M.at(i, k) = fdiv_r(M.at(i, k) - f * M.at(r, k), M.p);
        }
        ++r;
    }
    FpMat K(A.rows - r, A.rows, A.p);
    for (size_t i = r; i < A.rows; ++i)
        for (size_t j = 0; j < A.rows; ++j) K.at(i - r, j) = M.at(i, A.cols + j);
    return K;
}

FpMat fp_mul(const FpMat& A, const FpMat& B) {
    check(A.cols == B.rows, errc::internal, "fp_mul shape");
    FpMat R(A.rows, B.cols, A.p);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (size_t j = 0; j < B.cols; ++j) R.at(i, j) = (R.at(i, j) + A.at(i, k) * B.at(k, j)) % A.p;
        }
    return R;
}

} // namespace ct2
