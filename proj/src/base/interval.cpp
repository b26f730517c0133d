#include "base/interval.hpp"

#include <cmath>
#include <cstdio>

#include "base/error.hpp"

namespace ct2 {

RIval::RIval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RIval::RIval(const RIval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RIval::RIval(RIval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    o.prec_ = 2;
}

RIval& RIval::operator=(const RIval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RIval& RIval::operator=(RIval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RIval::~RIval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RIval RIval::from_int(const Int& v, mpfr_prec_t prec) {
    RIval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RIval RIval::from_rat(const Rat& v, mpfr_prec_t prec) {
    RIval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

RIval RIval::from_long(long v, mpfr_prec_t prec) {
    RIval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RIval RIval::point(double v, mpfr_prec_t prec) {
    RIval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

RIval RIval::pi(mpfr_prec_t prec) {
    RIval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

RIval RIval::hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    check(lo <= hi, errc::internal, "hull: lo > hi");
    RIval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RIval RIval::operator+(const RIval& o) const {
    RIval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RIval RIval::operator-(const RIval& o) const {
    RIval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RIval RIval::operator-() const {
    RIval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RIval RIval::operator*(const RIval& o) const {
    RIval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo = min of products rounded down; hi = max rounded up.
    bool first = true;
    const mpfr_t* xs[2] = {&lo_, &hi_};
    const mpfr_t* ys[2] = {&o.lo_, &o.hi_};
    mpfr_t best_lo, best_hi;
    mpfr_init2(best_lo, r.prec_);
    mpfr_init2(best_hi, r.prec_);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, *xs[i], *ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_mul(t, *xs[i], *ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    mpfr_clear(t);
    return r;
}

RIval RIval::operator/(const RIval& o) const {
    check(!o.contains_zero(), errc::precision_exhausted, "interval division by interval containing 0");
    RIval r(std::max(prec_, o.prec_));
    mpfr_t t, best_lo, best_hi;
    mpfr_init2(t, r.prec_);
    mpfr_init2(best_lo, r.prec_);
    mpfr_init2(best_hi, r.prec_);
    bool first = true;
    const mpfr_t* xs[2] = {&lo_, &hi_};
    const mpfr_t* ys[2] = {&o.lo_, &o.hi_};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t, *xs[i], *ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, best_lo) < 0) mpfr_set(best_lo, t, MPFR_RNDD);
            mpfr_div(t, *xs[i], *ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, best_hi) > 0) mpfr_set(best_hi, t, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    mpfr_clear(t);
    return r;
}

RIval RIval::sqrt() const {
    RIval r(prec_);
    if (mpfr_sgn(lo_) < 0) {
        check(mpfr_sgn(hi_) >= 0, errc::precision_exhausted, "sqrt of negative interval");
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RIval RIval::abs() const {
    RIval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_neg(t, lo_, MPFR_RNDU);
    if (mpfr_cmp(t, hi_) > 0)
        mpfr_set(r.hi_, t, MPFR_RNDU);
    else
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RIval RIval::sq() const {
    RIval a = abs();
    RIval r(prec_);
    mpfr_mul(r.lo_, a.lo_, a.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, a.hi_, MPFR_RNDU);
    return r;
}

RIval RIval::log() const {
    check(is_certainly_positive(), errc::precision_exhausted, "log of nonpositive interval");
    RIval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RIval RIval::exp() const {
    RIval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RIval RIval::pow_ui(unsigned long k) const {
    if (k == 0) return from_long(1, prec_);
    if (k % 2 == 0) {
        RIval a = abs();
        RIval r(prec_);
        mpfr_pow_ui(r.lo_, a.lo_, k, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.hi_, k, MPFR_RNDU);
        return r;
    }
    RIval r(prec_);
    mpfr_pow_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
}

RIval RIval::root_ui(unsigned long k) const {
    check(mpfr_sgn(lo_) >= 0, errc::precision_exhausted, "root of negative interval");
    RIval r(prec_);
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
#else
    mpfr_root(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_root(r.hi_, hi_, k, MPFR_RNDU);
#endif
    return r;
}

RIval RIval::min(const RIval& o) const {
    RIval r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RIval RIval::max(const RIval& o) const {
    RIval r(std::max(prec_, o.prec_));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

bool RIval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool RIval::is_certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool RIval::is_certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool RIval::certainly_lt(const RIval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool RIval::certainly_le(const RIval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
bool RIval::overlaps(const RIval& o) const {
    return !(certainly_lt(o) || o.certainly_lt(*this));
}
bool RIval::contains(const Rat& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

double RIval::mid_d() const {
    double a = mpfr_get_d(lo_, MPFR_RNDN), b = mpfr_get_d(hi_, MPFR_RNDN);
    return 0.5 * (a + b);
}

double RIval::rad_d() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return 0.5 * d;
}

Rat RIval::mid_rat() const {
    mpq_t q;
    mpq_init(q);
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    mpfr_get_q(q, m);
    Rat r(q);
    mpq_clear(q);
    mpfr_clear(m);
    return r;
}

double RIval::mag_d() const {
    double a = std::fabs(mpfr_get_d(lo_, MPFR_RNDU));
    double b = std::fabs(mpfr_get_d(hi_, MPFR_RNDU));
    return std::max(a, b);
}

std::string RIval::str() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g ± %.3g", mid_d(), rad_d());
    return buf;
}

CIval CIval::from_real(const RIval& r) {
    CIval c;
    c.re = r;
    c.im = RIval(r.prec());
    return c;
}

RIval ival_det(std::vector<std::vector<RIval>> m) {
    size_t n = m.size();
    if (n == 0) return RIval::from_long(1, RIval::default_prec);
    mpfr_prec_t prec = m[0][0].prec();
    RIval d = RIval::from_long(1, prec);
    for (size_t k = 0; k < n; ++k) {
        // pick the pivot with largest midpoint magnitude that is certainly nonzero
        size_t piv = k;
        double best = -1;
        for (size_t i = k; i < n; ++i) {
            if (m[i][k].contains_zero()) continue;
            double v = std::fabs(m[i][k].mid_d());
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        check(best >= 0, errc::precision_exhausted, "interval det: no certain pivot");
        if (piv != k) {
            std::swap(m[piv], m[k]);
            d = -d;
        }
        d = d * m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].contains_zero() && m[i][k].rad_d() == 0.0) continue;
            RIval f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return d;
}

} // namespace ct2
