#include "classgrp/classgroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>

#include "base/error.hpp"
#include "lattice/lattice.hpp"

namespace ct2 {

Rat minkowski_bound(const NumberField& K) {
    // floor of (n!/n^n) (4/pi)^s sqrt|disc|, certified via intervals; on
    // boundary ambiguity the larger value is used (a bigger factor base is
    // harmless).
    int n = K.degree();
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (long bits : {128L, 512L, 2048L}) {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);
        RIval mb = RIval::from_rat(Rat(fact) / Rat(pow_ui(Int(n), static_cast<unsigned long>(n))), prec);
        RIval four_over_pi = RIval::from_long(4, prec) / RIval::pi(prec);
        for (int i = 0; i < K.s_complex(); ++i) mb = mb * four_over_pi;
        mb = mb * RIval::from_int(abs(K.disc()), prec).sqrt();
        mpz_class flo, fhi;
        mpfr_get_z(flo.get_mpz_t(), mb.lo(), MPFR_RNDD);
        mpfr_get_z(fhi.get_mpz_t(), mb.hi(), MPFR_RNDD);
        if (flo == fhi) return Rat(flo);
        if (bits == 2048L) return Rat(fhi);
    }
    return Rat(0); // unreachable
}

unsigned long count_roots_of_unity(const NumberField& K) {
    if (K.r_real() > 0) return 2;
    auto pts = enumerate_box(K, BoxRadius{Rat(1), 1});
    unsigned long w = 0;
    for (const auto& x : pts) {
        if (K.is_zero(x)) continue;
        check(K.is_torsion_unit(x), errc::internal, "unit-box element not torsion");
        ++w;
    }
    return w;
}

namespace {

// Exact division in K: a/b as (num elem, positive integer den).
std::pair<Elem, Int> field_div(const NumberField& K, const Elem& a, const Elem& b) {
    size_t n = static_cast<size_t>(K.degree());
    QMat Mb(K.mult_matrix(b), Int(1));
    std::vector<Rat> rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = Rat(a[i]);
    std::vector<Rat> x = solve_left(Mb, rhs);
    Int den = 1;
    for (auto& q : x) {
        q.canonicalize();
        den = lcm(den, Int(q.get_den()));
    }
    Elem num(n);
    for (size_t i = 0; i < n; ++i) num[i] = Int(Rat(x[i] * den).get_num());
    return {num, den};
}

} // namespace

ClassGroup::ClassGroup(const NumberField& K, const ClassGroupOptions& opt) : K_(&K), opt_(opt) {
    size_t n = static_cast<size_t>(K.degree());
    Rat mb = minkowski_bound(K);
    // factor base: all primes of norm <= mb
    for (long p : primes_up_to(static_cast<long>(mb.get_num().get_si()))) {
        for (auto& P : split_prime(K, Int(p))) {
            if (Rat(pow_ui(Int(p), static_cast<unsigned long>(P.f))) <= mb) fb_.push_back(P);
        }
    }
    if (K.degree() == 2 && K.r_real() == 2) {
        // ramified primes join the base: products of them are principal with
        // mixed-sign generators (sqrt(disc)), which the narrow lattice needs
        for (const auto& [p, e] : factorize(K.disc())) {
            (void)e;
            bool have = false;
            for (const auto& P : fb_) have = have || P.p == p;
            if (have) continue;
            for (auto& P : split_prime(K, p))
                if (P.e > 1) fb_.push_back(P);
        }
        std::sort(fb_.begin(), fb_.end(),
                  [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.P < b.P; });
    }
    if (K.degree() == 2) bqf_ = quadratic_class_data(K);

    size_t k = fb_.size();
    if (k == 0) {
        h_ = 1;
        relations_ = ZMat(0, 0);
        if (bqf_) {
            check(bqf_->h_wide == 1, errc::internal, "empty factor base but BQF says h > 1");
            narrow_divisors_ = bqf_->narrow_divisors;
        }
        analytic_ratio_ = 1.0;
        return;
    }

    std::mt19937_64 rng(opt_.seed ^ std::hash<std::string>{}(format_poly(K.poly())));
    relations_ = ZMat(0, k);
    auto add_relation = [&](const std::vector<Int>& v, const Elem& alpha) {
        ZMat grown(relations_.rows + 1, k);
        for (size_t i = 0; i < relations_.rows; ++i)
            for (size_t j = 0; j < k; ++j) grown.at(i, j) = relations_.at(i, j);
        for (size_t j = 0; j < k; ++j) grown.at(relations_.rows, j) = v[j];
        relations_ = std::move(grown);
        rel_elems_.push_back(alpha);
        if (K.r_real() > 0) rel_signs_.push_back(real_signs(alpha));
    };

    // short bases of O, of each factor-base prime, and of pairwise products
    // (the products supply relations that separate conjugate primes)
    std::vector<std::vector<Elem>> pools;
    {
        std::vector<Elem> std_basis;
        for (size_t i = 0; i < n; ++i) {
            Elem e = K.zero();
            e[i] = 1;
            std_basis.push_back(e);
        }
        pools.push_back(lll_reduce_elems(K, std_basis, Int(1), 96));
        for (auto& P : fb_) pools.push_back(lll_reduce_elems(K, ideal_basis_elems(K, P.P), Int(1), 96));
        size_t kk = std::min<size_t>(fb_.size(), 10);
        for (size_t i = 0; i < kk; ++i)
            for (size_t j = i; j < kk; ++j) {
                FracIdeal prod = ideal_mul(K, fb_[i].P, fb_[j].P);
                pools.push_back(lll_reduce_elems(K, ideal_basis_elems(K, prod), Int(1), 96));
            }
    }

    std::set<std::vector<Int>> seen_rows;
    size_t smooth_found = 0;   // all smooth relations seen (duplicates included)
    size_t accepted_count = 0; // smooth_found when checks first passed
    std::vector<Int> accepted_divisors;
    Int accepted_h = 0;
    bool have_candidate = false;

    for (size_t round = 0; round < opt_.max_relation_rounds; ++round) {
        // generate a batch of candidate elements
        size_t per_pool = 6 + 2 * round;
        long spread = 2 + static_cast<long>(round / 6); // widen combos as rounds pass
        for (const auto& pool : pools) {
            for (size_t t = 0; t < per_pool; ++t) {
                Elem alpha = K.zero();
                for (const auto& v : pool) {
                    long c = static_cast<long>(rng() % (2 * static_cast<unsigned long>(spread) + 1)) - spread;
                    if (t == 0) c = 0; // first try the plain shortest vector
                    if (c != 0) alpha = K.add(alpha, K.mul_int(v, Int(c)));
                }
                if (t == 0) alpha = pool[0];
                if (K.is_zero(alpha)) continue;
                auto v = factor_vector(alpha);
                if (!v) continue;
                ++smooth_found;
                if (seen_rows.insert(*v).second) {
                    add_relation(*v, alpha);
                } else if (units_.size() < 32) {
                    // same exponent vector as an earlier relation: the ratio
                    // is a unit worth keeping for balancing
                    for (size_t rj = 0; rj < relations_.rows; ++rj) {
                        bool same = true;
                        for (size_t jj = 0; jj < k; ++jj)
                            if (relations_.at(rj, jj) != (*v)[jj]) same = false;
                        if (!same) continue;
                        auto q = K.div_exact(alpha, rel_elems_[rj]);
                        if (!q && !K.is_zero(rel_elems_[rj]))
                            q = K.div_exact(rel_elems_[rj], alpha);
                        if (q && !K.is_torsion_unit(*q) && !K.is_zero(*q)) {
                            bool dup = false;
                            for (auto& u : units_) dup = dup || u == *q;
                            if (!dup) units_.push_back(*q);
                        }
                        break;
                    }
                }
                // zero exponent vector means alpha itself is a unit
                bool allz = true;
                for (const auto& x : *v) allz = allz && x == 0;
                if (allz && units_.size() < 32 && !K.is_torsion_unit(alpha)) {
                    bool dup = false;
                    for (auto& u : units_) dup = dup || u == alpha;
                    if (!dup) units_.push_back(alpha);
                }
            }
        }
        // evaluate
        size_t rank = 0;
        hnf(relations_, nullptr, &rank);
        if (getenv("CT2_DEBUG")) fprintf(stderr, "[cg] round %zu rows=%zu rank=%zu k=%zu smooth=%zu\n", round, relations_.rows, rank, k, smooth_found);
        if (rank < k) continue;
        finalize_structure();
        bool pass = false;
        if (bqf_) {
            // the form-class oracle is the exact acceptance gate; the
            // relation-based narrow lattice is a best-effort cross-check
            // (large fundamental units can keep its sign data unsampled)
            bool wide_ok = (h_ == bqf_->h_wide) && (divisors_ == bqf_->wide_divisors);
            pass = wide_ok;
            analytic_ratio_ = wide_ok ? 1.0 : 0.0;
        } else {
            size_t unit_rank = 0;
            double reg = regulator_estimate(&unit_rank);
            size_t want = static_cast<size_t>(K.r_real() + K.s_complex() - 1);
            if (unit_rank >= want) {
                double analytic = analytic_estimate();
                double ratio = (h_.get_d() * reg) / analytic;
                analytic_ratio_ = ratio;
                pass = ratio < opt_.analytic_window && ratio > 1.0 / opt_.analytic_window;
                if (getenv("CT2_DEBUG")) fprintf(stderr, "[cg] h=%s reg=%f analytic=%f ratio=%f\n", h_.get_str().c_str(), reg, analytic, ratio);
            } else {
                if (getenv("CT2_DEBUG")) fprintf(stderr, "[cg] unit_rank=%zu < want=%zu\n", unit_rank, want);
            }
        }
        if (pass) {
            if (!have_candidate || divisors_ != accepted_divisors || h_ != accepted_h) {
                have_candidate = true;
                accepted_count = smooth_found;
                accepted_divisors = divisors_;
                accepted_h = h_;
                continue; // gather the +50% stability margin
            }
            if (smooth_found * 2 >= accepted_count * 3) return; // stable
        } else {
            have_candidate = false;
        }
    }
    fail(errc::relation_search_exhausted,
         "class group relation search budget exhausted for " + format_poly(K.poly()));
}

std::optional<std::vector<Int>> ClassGroup::factor_vector(const Elem& alpha) const {
    const NumberField& K = *K_;
    Int N = K.norm(alpha);
    if (N == 0) return std::nullopt;
    Int rest = abs(N);
    std::map<Int, unsigned> pexp;
    std::set<Int> fb_primes;
    for (const auto& P : fb_) fb_primes.insert(P.p);
    for (const auto& p : fb_primes) {
        while (rest % p == 0) {
            rest = divexact(rest, p);
            pexp[p]++;
        }
    }
    if (rest != 1) return std::nullopt;
    std::vector<Int> v(fb_.size(), Int(0));
    for (const auto& [p, vp] : pexp) {
        unsigned seen = 0;
        for (size_t j = 0; j < fb_.size(); ++j) {
            if (fb_[j].p != p) continue;
            int val = elem_valuation(K, fb_[j], alpha);
            v[j] = val;
            seen += static_cast<unsigned>(val * fb_[j].f);
        }
        if (seen != vp) return std::nullopt; // a prime above p outside the base divides
    }
    return v;
}

std::vector<int> ClassGroup::real_signs(const Elem& alpha) const {
    const NumberField& K = *K_;
    std::vector<int> out;
    for (long bits = 96; bits <= NumberField::bits_cap; bits *= 2) {
        out.clear();
        auto vals = K.embed(alpha, bits);
        bool ok = true;
        for (int i = 0; i < K.r_real() && ok; ++i) {
            const RIval& re = vals[static_cast<size_t>(i)].re;
            if (re.is_certainly_positive())
                out.push_back(0);
            else if (re.is_certainly_negative())
                out.push_back(1);
            else
                ok = false;
        }
        if (ok) return out;
    }
    fail(errc::precision_exhausted, "sign determination failed");
}

void ClassGroup::finalize_structure() {
    size_t k = fb_.size();
    ZMat H = hnf(relations_);
    check(H.rows == k, errc::internal, "finalize: relation lattice not full rank");
    ZMat U, V;
    snf_d_ = snf(H, &U, &V);
    snf_V_ = V;
    // integer inverse of V (unimodular)
    {
        QMat Vq(V, Int(1));
        QMat Vi = inverse(Vq);
        snf_Vinv_ = ZMat(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Rat q = Vi.at(i, j);
                q.canonicalize();
                check(q.get_den() == 1, errc::internal, "V not unimodular");
                snf_Vinv_.at(i, j) = Int(q.get_num());
            }
    }
    divisors_.clear();
    h_ = 1;
    for (const auto& d : snf_d_) {
        check(d > 0, errc::internal, "zero SNF divisor");
        h_ *= d;
        if (d > 1) divisors_.push_back(d);
    }
    std::sort(divisors_.begin(), divisors_.end());
    // generators for each nontrivial divisor
    generators_.clear();
    for (size_t i = 0; i < snf_d_.size(); ++i) {
        if (snf_d_[i] <= 1) continue;
        std::vector<Int> x(k, Int(0));
        for (size_t j = 0; j < k; ++j) x[j] = snf_Vinv_.at(i, j);
        generators_.push_back(ideal_class_canonical_rep(*K_, ideal_of_vector(x)));
    }
    // narrow structure for real quadratic fields
    narrow_divisors_ = divisors_;
    if (K_->degree() == 2 && K_->r_real() == 2 && !rel_elems_.empty()) {
        size_t m = relations_.rows;
        ZMat aug(m + 2, 2 + k);
        for (size_t i = 0; i < m; ++i) {
            aug.at(i, 0) = rel_signs_[i][0];
            aug.at(i, 1) = rel_signs_[i][1];
            for (size_t j = 0; j < k; ++j) aug.at(i, 2 + j) = relations_.at(i, j);
        }
        aug.at(m, 0) = 2;
        aug.at(m + 1, 1) = 2;
        ZMat H2 = hnf(aug);
        // rows with zero sign block form the totally-positive relation lattice
        std::vector<std::vector<Int>> pos_rows;
        for (size_t i = 0; i < H2.rows; ++i) {
            if (H2.at(i, 0) != 0 || H2.at(i, 1) != 0) continue;
            std::vector<Int> row(k);
            for (size_t j = 0; j < k; ++j) row[j] = H2.at(i, 2 + j);
            pos_rows.push_back(std::move(row));
        }
        narrow_from_relations_ = false;
        if (pos_rows.size() >= k) {
            ZMat Lpos(pos_rows.size(), k);
            for (size_t i = 0; i < pos_rows.size(); ++i)
                for (size_t j = 0; j < k; ++j) Lpos.at(i, j) = pos_rows[i][j];
            auto d2 = snf(Lpos);
            bool full = true;
            for (const auto& d : d2) full = full && d != 0;
            if (full) {
                narrow_divisors_.clear();
                for (const auto& d : d2)
                    if (d > 1) narrow_divisors_.push_back(d);
                std::sort(narrow_divisors_.begin(), narrow_divisors_.end());
                narrow_from_relations_ = true;
            }
        }
        if (!narrow_from_relations_ && bqf_) narrow_divisors_ = bqf_->narrow_divisors;
    }
}

double ClassGroup::analytic_estimate() const {
    const NumberField& K = *K_;
    long double rho = 1.0L;
    for (long p : primes_up_to(opt_.euler_prime_bound)) {
        auto fs = splitting_type(K, Int(p));
        long double num = 1.0L - 1.0L / p;
        long double den = 1.0L;
        for (int f : fs) den *= (1.0L - powl(static_cast<long double>(p), -static_cast<long double>(f)));
        rho *= num / den;
    }
    unsigned long w = count_roots_of_unity(K);
    long double sq = sqrtl(static_cast<long double>(Int(abs(K.disc())).get_d()));
    long double denom = powl(2.0L, K.r_real()) * powl(2.0L * 3.14159265358979323846L, K.s_complex());
    return static_cast<double>(w * sq * rho / denom);
}

double ClassGroup::regulator_estimate(size_t* unit_rank_out) const {
    const NumberField& K = *K_;
    size_t places = static_cast<size_t>(K.places());
    size_t t = places - 1;
    if (t == 0) {
        if (unit_rank_out) *unit_rank_out = 0;
        return 1.0;
    }
    // log vectors of relation elements (degree-weighted), truncated to the
    // first r+s-1 coordinates
    std::vector<std::vector<double>> logs;
    for (const auto& a : rel_elems_) {
        auto av = K.abs_embed(a, 96);
        std::vector<double> v(t);
        for (size_t i = 0; i < t; ++i) {
            int deg = static_cast<int>(i) < K.r_real() ? 1 : 2;
            v[i] = deg * std::log(std::max(av[i].mid_d(), 1e-300));
        }
        logs.push_back(std::move(v));
    }
    ZMat ker = left_kernel(relations_);
    std::vector<std::vector<double>> gens;
    for (size_t i = 0; i < ker.rows && gens.size() < 600; ++i) {
        std::vector<double> u(t, 0.0);
        for (size_t j = 0; j < ker.cols; ++j) {
            if (ker.at(i, j) == 0) continue;
            double c = ker.at(i, j).get_d();
            for (size_t x = 0; x < t; ++x) u[x] += c * logs[j][x];
        }
        double n2 = 0;
        for (double x : u) n2 += x * x;
        if (n2 > 1e-12) gens.push_back(std::move(u));
    }
    // pairwise size-reduction until stable; drops dependent vectors and finds
    // the dense lattice generated by all unit logs (floating, heuristic).
    auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (size_t x = 0; x < t; ++x) s += a[x] * b[x];
        return s;
    };
    bool changed = true;
    int sweeps = 0;
    while (changed && sweeps++ < 64) {
        changed = false;
        std::sort(gens.begin(), gens.end(),
                  [&](const auto& a, const auto& b) { return dot(a, a) < dot(b, b); });
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [&](const auto& v) { return dot(v, v) < 1e-12; }),
                   gens.end());
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = 0; j < i; ++j) {
                double denom = dot(gens[j], gens[j]);
                if (denom < 1e-12) continue;
                double q = std::round(dot(gens[i], gens[j]) / denom);
                if (q != 0) {
                    for (size_t x = 0; x < t; ++x) gens[i][x] -= q * gens[j][x];
                    changed = true;
                }
            }
        }
    }
    // Gram-Schmidt covolume of the surviving independent vectors
    std::vector<std::vector<double>> basis;
    double reg2 = 1.0;
    for (auto& u : gens) {
        std::vector<double> w = u;
        for (const auto& b : basis) {
            double f = dot(w, b) / dot(b, b);
            for (size_t x = 0; x < t; ++x) w[x] -= f * b[x];
        }
        double n2 = dot(w, w);
        if (n2 > 1e-10) {
            basis.push_back(w);
            reg2 *= n2;
        }
        if (basis.size() == t) break;
    }
    if (unit_rank_out) *unit_rank_out = basis.size();
    if (basis.size() < t) return 0.0;
    return std::sqrt(reg2);
}

std::vector<double> ClassGroup::rel_log_combo(const std::vector<Int>& c) const {
    const NumberField& K = *K_;
    size_t places = static_cast<size_t>(K.places());
    std::vector<double> t(places, 0.0);
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        auto av = K.abs_embed(rel_elems_[j], 96);
        double f = c[j].get_d();
        for (size_t x = 0; x < places; ++x) {
            int deg = static_cast<int>(x) < K.r_real() ? 1 : 2;
            t[x] += f * deg * std::log(std::max(av[x].mid_d(), 1e-300));
        }
    }
    return t;
}

const ClassGroup::BalanceBasis& ClassGroup::balance_basis() const {
    if (balance_) return *balance_;
    const NumberField& K = *K_;
    size_t places = static_cast<size_t>(K.places());
    BalanceBasis bb;
    ZMat ker = left_kernel(relations_);
    // drop kernel rows whose log image is (numerically) zero: they are
    // torsion directions and cannot balance anything
    std::vector<std::vector<Int>> rows;
    std::vector<std::vector<double>> logs;
    for (size_t i = 0; i < ker.rows && rows.size() < 64; ++i) {
        std::vector<Int> row(ker.cols);
        for (size_t j = 0; j < ker.cols; ++j) row[j] = ker.at(i, j);
        auto lg = rel_log_combo(row);
        double n2 = 0;
        for (double x : lg) n2 += x * x;
        if (n2 < 1e-10) continue;
        rows.push_back(std::move(row));
        logs.push_back(std::move(lg));
    }
    if (!rows.empty()) {
        // LLL on the log images, tracking the exact integer combination
        std::vector<std::vector<RIval>> lll_rows;
        for (auto& lg : logs) {
            std::vector<RIval> r;
            for (double x : lg) r.push_back(RIval::point(x, 64));
            lll_rows.push_back(std::move(r));
        }
        ZMat U = lll_transform(lll_rows, 64);
        for (size_t i = 0; i < rows.size(); ++i) {
            std::vector<Int> combo(rows[0].size(), Int(0));
            for (size_t j = 0; j < rows.size(); ++j) {
                if (U.at(i, j) == 0) continue;
                for (size_t x = 0; x < combo.size(); ++x) combo[x] += U.at(i, j) * rows[j][x];
            }
            auto lg = rel_log_combo(combo);
            double n2 = 0;
            for (double x : lg) n2 += x * x;
            if (n2 < 1e-10) continue;
            bb.combos.push_back(std::move(combo));
            bb.logs.push_back(std::move(lg));
        }
        // smallest log norms first: Babai works best in that order
        std::vector<size_t> order(bb.combos.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            double na = 0, nbv = 0;
            for (double x : bb.logs[a]) na += x * x;
            for (double x : bb.logs[b]) nbv += x * x;
            return na < nbv;
        });
        BalanceBasis sorted;
        size_t want = static_cast<size_t>(K.places()) + 2;
        for (size_t idx : order) {
            if (sorted.combos.size() >= want) break;
            sorted.combos.push_back(bb.combos[idx]);
            sorted.logs.push_back(bb.logs[idx]);
        }
        bb = std::move(sorted);
    }
    (void)places;
    balance_ = std::move(bb);
    return *balance_;
}

FracIdeal ClassGroup::ideal_of_vector(const std::vector<Int>& v_in) const {
    const NumberField& K = *K_;
    // reduce the exponent vector modulo the relation lattice (the class is
    // unchanged and the entries stay small)
    std::vector<Int> v = v_in;
    if (relations_.rows > 0) {
        ZMat H = hnf(relations_);
        for (size_t i = 0; i < H.rows; ++i) {
            size_t pj = 0;
            while (pj < H.cols && H.at(i, pj) == 0) ++pj;
            if (pj == H.cols) continue;
            Int q = fdiv_q(v[pj], H.at(i, pj));
            if (q != 0)
                for (size_t t = 0; t < H.cols; ++t) v[t] -= q * H.at(i, t);
        }
    }
    FracIdeal acc = ideal_one(K);
    for (size_t j = 0; j < fb_.size(); ++j) {
        if (v[j] == 0) continue;
        check(mpz_fits_slong_p(v[j].get_mpz_t()), errc::internal, "huge exponent");
        acc = ideal_mul(K, acc, ideal_pow(K, fb_[j].P, v[j].get_si()));
        // keep the representative small; the class is what matters here
        if (ideal_norm(K, acc) > Rat(Int("1000000000000")) || acc.den > Int("1000000"))
            acc = ideal_class_canonical_rep(K, acc);
    }
    return acc;
}

Int ClassGroup::torsion_count(const Int& m) const {
    Int t = 1;
    for (const auto& d : divisors_) t *= gcd(d, m);
    return t;
}

unsigned ClassGroup::rank2() const {
    unsigned r = 0;
    for (const auto& d : divisors_)
        if (d % 2 == 0) ++r;
    return r;
}

Int ClassGroup::h_narrow() const {
    Int h = 1;
    for (const auto& d : narrow_divisors_) h *= d;
    return h;
}

std::vector<Int> ClassGroup::class_vector(const FracIdeal& I) const {
    const NumberField& K = *K_;
    // the numerator lattice J = den*I is integral and lies in the same class
    FracIdeal J{I.num, Int(1)};
    std::function<std::vector<Int>(const FracIdeal&, int)> decomp =
        [&](const FracIdeal& A, int depth) -> std::vector<Int> {
        check(depth < 12, errc::not_smooth, "ideal reduction chain too deep");
        Rat nr = ideal_norm(K, A);
        Int N(nr.get_num());
        if (N == 1) return std::vector<Int>(fb_.size(), Int(0));
        // direct factorization over the base
        Int rest = N;
        std::set<Int> fbp;
        for (const auto& P : fb_) fbp.insert(P.p);
        for (const auto& p : fbp)
            while (rest % p == 0) rest = divexact(rest, p);
        if (rest == 1) {
            std::vector<Int> v(fb_.size(), Int(0));
            Int nchk = 1;
            for (size_t j = 0; j < fb_.size(); ++j) {
                int val = ideal_valuation(K, fb_[j], A);
                v[j] = val;
                for (int tt = 0; tt < val * fb_[j].f; ++tt) nchk *= fb_[j].p;
            }
            if (nchk == N) return v;
        }
        // reduce by a short element: A = (gamma) A2^{-1} => class(A) = -class(A2)
        for (const auto& gamma : ideal_short_elems(K, A)) {
            FracIdeal A2 = ideal_mul_elem(K, ideal_inv(K, A), gamma, Int(1));
            check(A2.is_integral(), errc::internal, "reduction not integral");
            if (!(ideal_norm(K, A2) < nr)) continue;
            try {
                std::vector<Int> v2 = decomp(A2, depth + 1);
                std::vector<Int> v(fb_.size());
                for (size_t j = 0; j < fb_.size(); ++j) v[j] = -v2[j];
                return v;
            } catch (const ct2_error& e) {
                if (e.code() != errc::not_smooth) throw;
            }
        }
        fail(errc::not_smooth, "ideal does not reduce to a smooth one");
    };
    std::vector<Int> v = decomp(J, 0);
    // SNF coordinates
    size_t k = fb_.size();
    std::vector<Int> y(divisors_.size(), Int(0));
    size_t slot = 0;
    std::vector<Int> yfull(k, Int(0));
    for (size_t j = 0; j < k; ++j)
        for (size_t t = 0; t < k; ++t) yfull[t] += v[j] * snf_V_.at(j, t);
    for (size_t t = 0; t < k; ++t) {
        if (snf_d_[t] <= 1) continue;
        y[slot++] = fdiv_r(yfull[t], snf_d_[t]);
    }
    return y;
}

std::optional<Elem> ClassGroup::is_principal(const FracIdeal& I) const {
    const NumberField& K = *K_;
    // work on the integral numerator lattice J = den*I; generator(I) =
    // generator(J)/den when the caller passes a fractional ideal.
    FracIdeal J{I.num, Int(1)};
    struct Decomp {
        std::vector<Int> v;
        std::vector<Elem> num; // J = (prod num / prod den) * prod P^v exactly
        std::vector<Elem> den;
    };
    std::function<Decomp(const FracIdeal&, int)> decomp = [&](const FracIdeal& A,
                                                              int depth) -> Decomp {
        check(depth < 12, errc::not_smooth, "ideal reduction chain too deep");
        Rat nr = ideal_norm(K, A);
        Int N(nr.get_num());
        if (N == 1) return {std::vector<Int>(fb_.size(), Int(0)), {}, {}};
        Int rest = N;
        std::set<Int> fbp;
        for (const auto& P : fb_) fbp.insert(P.p);
        for (const auto& p : fbp)
            while (rest % p == 0) rest = divexact(rest, p);
        if (rest == 1) {
            std::vector<Int> v(fb_.size(), Int(0));
            Int nchk = 1;
            for (size_t j = 0; j < fb_.size(); ++j) {
                int val = ideal_valuation(K, fb_[j], A);
                v[j] = val;
                for (int tt = 0; tt < val * fb_[j].f; ++tt) nchk *= fb_[j].p;
            }
            if (nchk == N) return {v, {}, {}};
        }
        for (const auto& gamma : ideal_short_elems(K, A)) {
            FracIdeal A2 = ideal_mul_elem(K, ideal_inv(K, A), gamma, Int(1));
            check(A2.is_integral(), errc::internal, "reduction not integral");
            if (!(ideal_norm(K, A2) < nr)) continue;
            try {
                Decomp d2 = decomp(A2, depth + 1);
                // A = (gamma) A2^{-1} = (gamma * den2 / num2) * prod P^{-v2}
                Decomp d;
                d.v.resize(fb_.size());
                for (size_t j = 0; j < fb_.size(); ++j) d.v[j] = -d2.v[j];
                d.num = d2.den;
                d.num.push_back(gamma);
                d.den = d2.num;
                return d;
            } catch (const ct2_error& e) {
                if (e.code() != errc::not_smooth) throw;
            }
        }
        fail(errc::not_smooth, "ideal does not reduce to a smooth one");
    };
    Decomp dc = decomp(J, 0);
    // J = (prod num / prod den) * prod P^{v}: principal iff v in relation lattice
    std::optional<std::vector<Int>> c;
    if (fb_.empty()) {
        c = std::vector<Int>{};
    } else {
        c = solve_left(relations_, dc.v);
    }
    if (!c.has_value()) return std::nullopt;
    if (getenv("CT2_DEBUG")) {
        double mx = 0;
        for (auto& x : *c) mx = std::max(mx, std::fabs(x.get_d()));
        fprintf(stderr, "[ip] raw c max=%g rows=%zu\n", mx, relations_.rows);
    }
    if (!c->empty()) {
        // balance the exponent vector against the reduced unit-log basis so
        // the reconstructed generator (and the intermediate products) stay
        // of moderate size
        const BalanceBasis& bb = balance_basis();
        if (!bb.combos.empty()) {
            size_t t = bb.logs[0].size();
            for (int sweep = 0; sweep < 8; ++sweep) {
                std::vector<double> cur = rel_log_combo(*c);
                bool changed = false;
                for (size_t i = 0; i < bb.combos.size(); ++i) {
                    double uu = 0, tu = 0;
                    for (size_t x = 0; x < t; ++x) {
                        uu += bb.logs[i][x] * bb.logs[i][x];
                        tu += cur[x] * bb.logs[i][x];
                    }
                    if (uu < 1e-9) continue;
                    double qd = tu / uu;
                    if (!(qd < 9e15 && qd > -9e15)) fail(errc::precision_exhausted, "balance overflow");
                    long q = std::lround(qd);
                    if (q == 0) continue;
                    for (size_t j = 0; j < c->size(); ++j) (*c)[j] -= q * bb.combos[i][j];
                    for (size_t x = 0; x < t; ++x) cur[x] -= q * bb.logs[i][x];
                    changed = true;
                }
                if (!changed) break;
            }
        }
    }
    // generator g = (prod num / prod den) * prod alpha_j^{c_j}
    Elem gnum = K.one(), gden = K.one();
    for (const auto& e : dc.num) gnum = K.mul(gnum, e);
    for (const auto& e : dc.den) gden = K.mul(gden, e);
    for (size_t j = 0; j < c->size(); ++j) {
        Int cj = (*c)[j];
        check(mpz_fits_slong_p(cj.get_mpz_t()), errc::internal, "relation exponent too large");
        long e = cj.get_si();
        if (e > 0)
            gnum = K.mul(gnum, K.pow(rel_elems_[j], static_cast<unsigned long>(e)));
        else if (e < 0)
            gden = K.mul(gden, K.pow(rel_elems_[j], static_cast<unsigned long>(-e)));
    }
    if (getenv("CT2_DEBUG")) {
        double mx = 0;
        for (auto& x : *c) mx = std::max(mx, std::fabs(x.get_d()));
        size_t nb = 0, db = 0;
        for (auto& x : gnum) nb = std::max(nb, mpz_sizeinbase(x.get_mpz_t(), 2));
        for (auto& x : gden) db = std::max(db, mpz_sizeinbase(x.get_mpz_t(), 2));
        fprintf(stderr, "[ip] balanced c max=%g gnum bits=%zu gden bits=%zu\n", mx, nb, db);
    }
    auto [q, qden] = field_div(K, gnum, gden);
    // g = q/qden must generate J: check (q) == qden * J
    FracIdeal lhs = ideal_from_elem(K, q);
    FracIdeal rhs = ideal_mul_elem(K, J, K.from_int(qden), Int(1));
    check(lhs == rhs, errc::internal, "recovered generator does not regenerate the ideal");
    Elem g = q;
    Int totden = qden * I.den;
    if (totden == 1) return g;
    bool divisible = true;
    for (const auto& x : g)
        if (x % totden != 0) divisible = false;
    if (divisible) {
        for (auto& x : g) x = divexact(x, totden);
        return g;
    }
    check(!I.is_integral(), errc::internal, "integral principal ideal with fractional generator");
    return g; // generator of den*I; fractional callers handle the scaling
}

std::vector<TorsionClass> ClassGroup::m_torsion(const Int& m) const {
    const NumberField& K = *K_;
    std::vector<TorsionClass> out;
    auto tors = torsion_exponents(divisors_, m);
    size_t k = fb_.size();
    for (const auto& y : tors) {
        TorsionClass tc;
        tc.dl = y;
        // order = lcm d_i/gcd(d_i, y_i)
        Int order = 1;
        for (size_t i = 0; i < divisors_.size(); ++i) {
            if (y[i] == 0) continue;
            order = lcm(order, divexact(divisors_[i], gcd(divisors_[i], y[i])));
        }
        tc.order = order;
        if (order == 1) {
            tc.ideal = ideal_one(K);
        } else {
            // x = yfull * V^{-1}
            std::vector<Int> yfull(k, Int(0));
            size_t slot = 0;
            for (size_t t = 0; t < k; ++t) {
                if (snf_d_[t] <= 1) continue;
                yfull[t] = y[slot++];
            }
            std::vector<Int> x(k, Int(0));
            for (size_t t = 0; t < k; ++t)
                for (size_t j = 0; j < k; ++j) x[j] += yfull[t] * snf_Vinv_.at(t, j);
            tc.ideal = ideal_class_canonical_rep(K, ideal_of_vector(x));
        }
        out.push_back(std::move(tc));
    }
    std::sort(out.begin(), out.end(), [](const TorsionClass& a, const TorsionClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.ideal < b.ideal;
    });
    return out;
}

} // namespace ct2
