#include "field/rootcert.hpp"

#include <algorithm>
#include <complex>
#include <random>

#include "base/error.hpp"
#include "base/modpoly.hpp"

namespace ct2 {

namespace {

using QPoly = std::vector<Rat>; // dense, trailing zeros trimmed

QPoly q_from_z(const ZPoly& f) {
    QPoly q(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) q[i] = Rat(f.c[i]);
    return q;
}

int q_deg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void q_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly q_derivative(const QPoly& f) {
    if (f.size() <= 1) return {};
    QPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * f[i];
    return d;
}

QPoly q_rem(QPoly a, const QPoly& b) {
    while (!a.empty() && q_deg(a) >= q_deg(b)) {
        Rat fac = a.back() / b.back();
        size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= fac * b[i];
        q_trim(a);
    }
    return a;
}

Rat q_eval(const QPoly& f, const Rat& x) {
    Rat r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

std::vector<QPoly> sturm_chain(const ZPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(q_from_z(f));
    chain.push_back(q_derivative(chain[0]));
    while (!chain.back().empty() && q_deg(chain.back()) >= 1) {
        QPoly r = q_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_rat(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_changes_at(const std::vector<QPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_rat(q_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sign_changes_at_inf(const std::vector<QPoly>& chain, int dir) { // dir=+1/-1
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign_rat(p.back());
        if (dir < 0 && q_deg(p) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

Rat cauchy_bound(const ZPoly& f) {
    Rat m = 0;
    for (size_t i = 0; i + 1 < f.c.size(); ++i) {
        Rat v = Rat(abs(f.c[i])) / Rat(abs(f.lead()));
        if (v > m) m = v;
    }
    return m + 1;
}

std::complex<double> cd_eval(const ZPoly& f, std::complex<double> z) {
    std::complex<double> r = 0;
    for (size_t i = f.c.size(); i-- > 0;) r = r * z + f.c[i].get_d();
    return r;
}

std::vector<std::complex<double>> aberth(const ZPoly& f, uint64_t seed) {
    int n = f.degree();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double R = cauchy_bound(f).get_d();
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double ang = 2 * 3.14159265358979323846 * (i + 0.35) / n + 0.4 * uni(rng);
        double rad = R * (0.3 + 0.6 * uni(rng));
        z[static_cast<size_t>(i)] = std::polar(rad, ang);
    }
    ZPoly df = derivative(f);
    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            auto zi = z[static_cast<size_t>(i)];
            auto fv = cd_eval(f, zi);
            if (std::abs(fv) == 0) continue;
            auto dv = cd_eval(df, zi);
            std::complex<double> ratio = fv / dv;
            std::complex<double> sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (zi - z[static_cast<size_t>(j)]);
            std::complex<double> delta = ratio / (1.0 - ratio * sum);
            z[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14 * R) break;
    }
    return z;
}

// One complex Newton refinement pass in plain mpfr midpoint arithmetic.
void mpfr_newton(const ZPoly& f, const ZPoly& df, mpfr_t zre, mpfr_t zim, int steps) {
    mpfr_prec_t prec = mpfr_get_prec(zre);
    mpfr_t fr, fi, dr, di, t1, t2, t3, den;
    mpfr_inits2(prec, fr, fi, dr, di, t1, t2, t3, den, static_cast<mpfr_ptr>(nullptr));
    auto horner = [&](const ZPoly& p, mpfr_t outr, mpfr_t outi) {
        mpfr_set_zero(outr, 1);
        mpfr_set_zero(outi, 1);
        for (size_t i = p.c.size(); i-- > 0;) {
            mpfr_mul(t1, outr, zre, MPFR_RNDN);
            mpfr_mul(t2, outi, zim, MPFR_RNDN);
            mpfr_sub(t1, t1, t2, MPFR_RNDN);
            mpfr_mul(t2, outr, zim, MPFR_RNDN);
            mpfr_mul(t3, outi, zre, MPFR_RNDN);
            mpfr_add(t2, t2, t3, MPFR_RNDN);
            mpfr_add_z(outr, t1, p.c[i].get_mpz_t(), MPFR_RNDN);
            mpfr_set(outi, t2, MPFR_RNDN);
        }
    };
    for (int s = 0; s < steps; ++s) {
        horner(f, fr, fi);
        horner(df, dr, di);
        mpfr_mul(t1, dr, dr, MPFR_RNDN);
        mpfr_mul(t2, di, di, MPFR_RNDN);
        mpfr_add(den, t1, t2, MPFR_RNDN);
        if (mpfr_zero_p(den)) break;
        mpfr_mul(t1, fr, dr, MPFR_RNDN);
        mpfr_mul(t2, fi, di, MPFR_RNDN);
        mpfr_add(t1, t1, t2, MPFR_RNDN);
        mpfr_div(t1, t1, den, MPFR_RNDN);
        mpfr_mul(t2, fi, dr, MPFR_RNDN);
        mpfr_mul(t3, fr, di, MPFR_RNDN);
        mpfr_sub(t2, t2, t3, MPFR_RNDN);
        mpfr_div(t2, t2, den, MPFR_RNDN);
        mpfr_sub(zre, zre, t1, MPFR_RNDN);
        mpfr_sub(zim, zim, t2, MPFR_RNDN);
    }
    mpfr_clears(fr, fi, dr, di, t1, t2, t3, den, static_cast<mpfr_ptr>(nullptr));
}

Rat rat_from_mpfr(const mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rat r(q);
    mpq_clear(q);
    return r;
}

// Rigorous upper bound on n*|f(z)/f'(z)| at exact rational z; a disk of this
// radius about z contains at least one root of f. Returns an exact Rat.
Rat disk_radius_bound(const ZPoly& f, const ZPoly& df, const Rat& zre, const Rat& zim,
                      mpfr_prec_t prec) {
    CIval z{RIval::from_rat(zre, prec), RIval::from_rat(zim, prec)};
    auto horner = [&](const ZPoly& p) {
        CIval acc{RIval::from_long(0, prec), RIval::from_long(0, prec)};
        for (size_t i = p.c.size(); i-- > 0;) {
            acc = acc * z;
            acc.re = acc.re + RIval::from_int(p.c[i], prec);
        }
        return acc;
    };
    RIval num = horner(f).abs();
    RIval den = horner(df).abs();
    check(den.is_certainly_positive(), errc::precision_exhausted, "disk radius: |f'| interval hits 0");
    RIval rho = RIval::from_long(f.degree(), prec) * (num / den);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, rho.hi());
    Rat out(q);
    mpq_clear(q);
    return out;
}

} // namespace

int count_real_roots(const ZPoly& f) {
    check(f.degree() >= 1, errc::internal, "count_real_roots: constant");
    auto chain = sturm_chain(f);
    return sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
}

RootSystem RootSystem::isolate(const ZPoly& f, long bits) {
    check(f.degree() >= 1, errc::internal, "isolate: constant poly");
    check(gcd(f, derivative(f)).degree() == 0, errc::internal, "isolate: polynomial not squarefree");
    RootSystem out;
    out.poly_ = f;
    int n = f.degree();

    auto chain = sturm_chain(f);
    Rat B = cauchy_bound(f);
    struct Seg {
        Rat lo, hi;
        int count;
    };
    std::vector<Seg> work{{-B, B, sign_changes_at(chain, -B) - sign_changes_at(chain, B)}};
    std::vector<std::pair<Rat, Rat>> isolated;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            isolated.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (q_eval(chain[0], mid) == 0) {
            // mid is an exact rational root; carve out a tiny interval for it
            Rat eps = (s.hi - s.lo) / 1024;
            while (sign_changes_at(chain, mid - eps) - sign_changes_at(chain, mid + eps) != 1) eps /= 2;
            isolated.emplace_back(mid - eps, mid + eps);
            int left = sign_changes_at(chain, s.lo) - sign_changes_at(chain, mid - eps);
            int right = sign_changes_at(chain, mid + eps) - sign_changes_at(chain, s.hi);
            if (left > 0) work.push_back({s.lo, mid - eps, left});
            if (right > 0) work.push_back({mid + eps, s.hi, right});
            continue;
        }
        int left = sign_changes_at(chain, s.lo) - sign_changes_at(chain, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.r_ = static_cast<int>(isolated.size());
    check((n - out.r_) % 2 == 0, errc::internal, "isolate: parity of complex roots");
    out.s_ = (n - out.r_) / 2;
    out.real_isolation_ = std::move(isolated);
    out.rebuild_boxes(bits);
    return out;
}

void RootSystem::rebuild_boxes(long bits) {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    const ZPoly& f = poly_;
    const ZPoly df = derivative(f);
    const Rat target = Rat(1) / Rat(pow_ui(Int(2), static_cast<unsigned long>(bits)));

    std::vector<RootBox> boxes;

    // --- real roots: exact bisection on the stored isolating interval ---
    auto sign_at = [&](const Rat& x) {
        Rat v = f(x);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    for (auto& [lo_store, hi_store] : real_isolation_) {
        Rat lo = lo_store, hi = hi_store;
        int slo = sign_at(lo), shi = sign_at(hi);
        check(slo != 0 && shi != 0 && slo != shi, errc::internal, "real isolation endpoints degenerate");
        while (hi - lo > target) {
            Rat mid = (lo + hi) / 2;
            int sm = sign_at(mid);
            if (sm == 0) {
                // exact rational root; shrink symmetrically around it
                Rat eps = (hi - lo) / 2;
                while (eps * 2 > target) eps /= 2;
                lo = mid - eps;
                hi = mid + eps;
                break;
            }
            if (sm == slo)
                lo = mid;
            else
                hi = mid;
        }
        lo_store = lo;
        hi_store = hi;
        RootBox b;
        b.is_real = true;
        b.re = RIval::hull(lo, hi, prec);
        b.im = RIval::from_long(0, prec);
        boxes.push_back(std::move(b));
    }

    // --- complex roots: Newton-polished centers with certified disks ---
    if (s_ > 0) {
        const int max_attempts = 6;
        bool done = false;
        for (int attempt = 0; attempt < max_attempts && !done; ++attempt) {
            // (re)seed centers if absent or on retry
            if (complex_centers_.size() != static_cast<size_t>(s_) || attempt > 0) {
                auto approx = aberth(f, 0x5eed + static_cast<uint64_t>(attempt) * 77);
                std::vector<std::pair<double, std::complex<double>>> upper;
                for (auto& z : approx)
                    if (z.imag() > 0) upper.emplace_back(z.imag(), z);
                std::sort(upper.begin(), upper.end(),
                          [](const auto& a, const auto& b) { return a.first > b.first; });
                if (upper.size() < static_cast<size_t>(s_)) continue; // bad run, retry
                complex_centers_.clear();
                for (int i = 0; i < s_; ++i) {
                    auto z = upper[static_cast<size_t>(i)].second;
                    complex_centers_.emplace_back(Rat(z.real()), Rat(z.imag()));
                }
            }
            // polish each center at working precision
            long newton_prec = bits + 96;
            std::vector<std::pair<Rat, Rat>> centers = complex_centers_;
            std::vector<Rat> radii;
            bool ok = true;
            for (auto& [cre, cim] : centers) {
                mpfr_t zr, zi;
                mpfr_init2(zr, static_cast<mpfr_prec_t>(newton_prec));
                mpfr_init2(zi, static_cast<mpfr_prec_t>(newton_prec));
                mpfr_set_q(zr, cre.get_mpq_t(), MPFR_RNDN);
                mpfr_set_q(zi, cim.get_mpq_t(), MPFR_RNDN);
                mpfr_newton(f, df, zr, zi, 64);
                cre = rat_from_mpfr(zr);
                cim = rat_from_mpfr(zi);
                mpfr_clear(zr);
                mpfr_clear(zi);
                Rat rho;
                try {
                    rho = disk_radius_bound(f, df, cre, cim, prec);
                } catch (const ct2_error&) {
                    ok = false;
                    break;
                }
                if (rho * 2 > target || cim <= rho) {
                    ok = false;
                    break;
                }
                radii.push_back(rho);
            }
            if (!ok) continue;
            // disjointness: pairwise among upper disks and against conjugates
            for (size_t i = 0; i < centers.size() && ok; ++i)
                for (size_t j = 0; j < centers.size() && ok; ++j) {
                    if (i == j) continue;
                    Rat dx = centers[i].first - centers[j].first;
                    Rat dy = centers[i].second - centers[j].second;
                    Rat rr = radii[i] + radii[j];
                    if (i < j && dx * dx + dy * dy <= rr * rr) ok = false;
                    // against conjugate of j
                    Rat dy2 = centers[i].second + centers[j].second;
                    if (dx * dx + dy2 * dy2 <= rr * rr) ok = false;
                }
            if (!ok) continue;
            complex_centers_ = centers;
            std::vector<size_t> order(centers.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                if (centers[a].first != centers[b].first) return centers[a].first < centers[b].first;
                return centers[a].second < centers[b].second;
            });
            for (size_t idx : order) {
                RootBox b;
                b.is_real = false;
                b.re = RIval::hull(centers[idx].first - radii[idx], centers[idx].first + radii[idx], prec);
                b.im = RIval::hull(centers[idx].second - radii[idx], centers[idx].second + radii[idx], prec);
                boxes.push_back(std::move(b));
            }
            done = true;
        }
        check(done, errc::precision_exhausted, "complex root certification failed");
    }

    bits_ = bits;
    boxes_ = std::move(boxes);
}

void RootSystem::refine(long bits) {
    if (bits <= bits_) return;
    rebuild_boxes(bits);
}

std::vector<CIval> RootSystem::eval_at_roots(const std::vector<Int>& coeff, const Int& den) const {
    std::vector<CIval> out;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits_ + 64);
    RIval dden = RIval::from_int(den, prec);
    for (const auto& box : boxes_) {
        CIval z = box.as_cival();
        CIval acc{RIval::from_long(0, prec), RIval::from_long(0, prec)};
        if (box.is_real) {
            RIval racc = RIval::from_long(0, prec);
            for (size_t i = coeff.size(); i-- > 0;)
                racc = racc * z.re + RIval::from_int(coeff[i], prec);
            acc.re = racc;
            acc.im = RIval::from_long(0, prec);
        } else {
            for (size_t i = coeff.size(); i-- > 0;) {
                acc = acc * z;
                acc.re = acc.re + RIval::from_int(coeff[i], prec);
            }
        }
        acc.re = acc.re / dden;
        acc.im = acc.im / dden;
        out.push_back(std::move(acc));
    }
    return out;
}

// --- certified factorization over Z (declared in polyz.hpp) ---

namespace {

// Factor a squarefree monic polynomial exactly, via certified root subsets.
std::vector<ZPoly> factor_squarefree_monic(const ZPoly& f) {
    int n = f.degree();
    if (n == 1) return {f};
    // strip integer roots first
    {
        auto zr = integer_roots(f);
        if (!zr.empty()) {
            std::vector<ZPoly> out;
            ZPoly rest = f;
            for (const auto& root : zr) {
                ZPoly lin{{-root, Int(1)}};
                out.push_back(lin);
                rest = divexact(rest, lin);
            }
            if (rest.degree() >= 1) {
                auto more = factor_squarefree_monic(rest);
                out.insert(out.end(), more.begin(), more.end());
            }
            return out;
        }
    }
    // fast path: irreducible mod some small prime
    Int dpoly = discriminant(f);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        if (dpoly % p == 0) continue;
        if (fp_is_irreducible(fp_reduce(f, Int(p)), Int(p))) return {f};
    }
    // certified subset search
    long bits = 64;
    const long bits_cap = 1 << 14;
    while (true) {
        RootSystem rs = RootSystem::isolate(f, bits);
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
        // atoms: each real root is a degree-1 atom; each complex box is a
        // degree-2 atom (the conjugate pair)
        struct Atom {
            int degree;
            std::vector<RIval> coeffs; // monic real polynomial, constant first (degree entries)
        };
        std::vector<Atom> atoms;
        const auto& boxes = rs.roots();
        for (const auto& b : boxes) {
            if (b.is_real) {
                atoms.push_back({1, {-b.re}});
            } else {
                // (x - z)(x - conj z) = x^2 - 2 Re z x + |z|^2
                RIval two = RIval::from_long(2, prec);
                atoms.push_back({2, {b.re.sq() + b.im.sq(), -(two * b.re)}});
            }
        }
        size_t na = atoms.size();
        bool ambiguous = false;
        ZPoly found;
        // subsets by increasing total degree
        for (int dtarget = 1; dtarget <= n / 2 && found.is_zero() && !ambiguous; ++dtarget) {
            for (uint32_t mask = 1; mask < (1u << na) && found.is_zero() && !ambiguous; ++mask) {
                int dsum = 0;
                for (size_t i = 0; i < na; ++i)
                    if (mask & (1u << i)) dsum += atoms[i].degree;
                if (dsum != dtarget) continue;
                // multiply the atoms' polynomials with interval arithmetic
                std::vector<RIval> prod{RIval::from_long(1, prec)};
                for (size_t i = 0; i < na; ++i) {
                    if (!(mask & (1u << i))) continue;
                    const auto& at = atoms[i];
                    std::vector<RIval> next(prod.size() + static_cast<size_t>(at.degree),
                                            RIval::from_long(0, prec));
                    for (size_t a = 0; a < prod.size(); ++a) {
                        // times monic atom: x^deg + coeffs
                        next[a + static_cast<size_t>(at.degree)] =
                            next[a + static_cast<size_t>(at.degree)] + prod[a];
                        for (int c = 0; c < at.degree; ++c)
                            next[a + static_cast<size_t>(c)] =
                                next[a + static_cast<size_t>(c)] + prod[a] * at.coeffs[static_cast<size_t>(c)];
                    }
                    prod = std::move(next);
                }
                // candidate integer coefficients
                std::vector<Int> cand(prod.size());
                bool viable = true;
                for (size_t i = 0; i + 1 < prod.size() && viable; ++i) {
                    // unique integer in the interval?
                    Rat lo = rat_from_mpfr(prod[i].lo()), hi = rat_from_mpfr(prod[i].hi());
                    Int ilo, ihi;
                    mpz_cdiv_q(ilo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t()); // ceil(lo)
                    mpz_fdiv_q(ihi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t()); // floor(hi)
                    if (ilo > ihi) {
                        viable = false; // no integer in range: not a factor
                    } else if (ilo == ihi) {
                        cand[i] = ilo;
                    } else {
                        ambiguous = true; // interval too wide
                        viable = false;
                    }
                }
                if (!viable) continue;
                cand.back() = 1;
                ZPoly candidate{std::vector<Int>(cand.begin(), cand.end())};
                ZPoly q, r;
                divrem_monic(f, candidate, q, r);
                if (r.is_zero()) found = candidate;
            }
        }
        if (!found.is_zero()) {
            std::vector<ZPoly> out{found};
            auto more = factor_squarefree_monic(divexact(f, found));
            out.insert(out.end(), more.begin(), more.end());
            return out;
        }
        if (!ambiguous) return {f}; // certified: no proper divisor
        bits *= 2;
        check(bits <= bits_cap, errc::precision_exhausted, "factor: certification bits exhausted");
    }
}

} // namespace

std::vector<ZPoly> factor_monic(const ZPoly& f) {
    check(f.is_monic() && f.degree() >= 1, errc::internal, "factor_monic: need monic, degree >= 1");
    // peel multiplicities via gcd with derivative
    ZPoly g = gcd(f, derivative(f));
    if (g.degree() > 0) {
        std::vector<ZPoly> out = factor_monic(divexact(f, g)); // squarefree part factors
        // multiplicities: divide f by each factor repeatedly
        std::vector<ZPoly> full;
        ZPoly rest = f;
        for (const auto& fac : out) {
            while (divides_q(fac, rest)) {
                full.push_back(fac);
                rest = divexact(rest, fac);
            }
        }
        check(rest.degree() == 0, errc::internal, "factor_monic: multiplicity peel failed");
        std::sort(full.begin(), full.end(), [](const ZPoly& a, const ZPoly& b) { return a.c < b.c; });
        return full;
    }
    auto out = factor_squarefree_monic(f);
    std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) { return a.c < b.c; });
    return out;
}

bool is_irreducible(const ZPoly& f) {
    check(f.is_monic() && f.degree() >= 1, errc::internal, "is_irreducible: need monic, degree >= 1");
    if (f.degree() == 1) return true;
    if (gcd(f, derivative(f)).degree() > 0) return false;
    if (!integer_roots(f).empty()) return false;
    Int dpoly = discriminant(f);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        if (dpoly % p == 0) continue;
        if (fp_is_irreducible(fp_reduce(f, Int(p)), Int(p))) return true;
    }
    return factor_monic(f).size() == 1;
}

} // namespace ct2
