#ifndef CT2_BASE_INTERVAL_HPP
#define CT2_BASE_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <vector>

#include "base/ints.hpp"

namespace ct2 {

// Real interval [lo, hi] with mpfr endpoints and directed rounding. All
// operations produce enclosures. Precision travels with the value.
class RIval {
  public:
    RIval() : RIval(default_prec) {}
    explicit RIval(mpfr_prec_t prec);
    RIval(const RIval& o);
    RIval(RIval&& o) noexcept;
    RIval& operator=(const RIval& o);
    RIval& operator=(RIval&& o) noexcept;
    ~RIval();

    static RIval from_int(const Int& v, mpfr_prec_t prec);
    static RIval from_rat(const Rat& v, mpfr_prec_t prec);
    static RIval from_long(long v, mpfr_prec_t prec);
    static RIval point(double v, mpfr_prec_t prec); // exact double
    static RIval pi(mpfr_prec_t prec);
    static RIval hull(const Rat& lo, const Rat& hi, mpfr_prec_t prec); // [lo, hi]

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    RIval operator+(const RIval& o) const;
    RIval operator-(const RIval& o) const;
    RIval operator*(const RIval& o) const;
    RIval operator/(const RIval& o) const; // requires o certainly nonzero
    RIval operator-() const;
    RIval sqrt() const; // requires lo >= 0 (clamps tiny negative lo to 0)
    RIval abs() const;
    RIval sq() const; // tight square (handles straddling zero)
    RIval log() const;
    RIval exp() const;
    RIval pow_ui(unsigned long k) const;
    RIval root_ui(unsigned long k) const; // k-th root, requires >= 0
    RIval min(const RIval& o) const;
    RIval max(const RIval& o) const;

    bool contains_zero() const;
    bool is_certainly_positive() const;
    bool is_certainly_negative() const;
    // Certified comparisons: true only if provable from the enclosures.
    bool certainly_lt(const RIval& o) const;
    bool certainly_le(const RIval& o) const;
    bool certainly_gt(const RIval& o) const { return o.certainly_lt(*this); }
    bool certainly_ge(const RIval& o) const { return o.certainly_le(*this); }
    bool overlaps(const RIval& o) const;
    bool contains(const Rat& v) const;

    double mid_d() const;
    double rad_d() const; // upper bound on radius, as double (inf-safe)
    Rat mid_rat() const;

    // Max |x| over the interval, as an upper-bound double.
    double mag_d() const;

    std::string str() const; // "mid ± rad" with 12 significant digits

    static constexpr mpfr_prec_t default_prec = 64;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Complex rectangle re + i*im.
struct CIval {
    RIval re, im;

    CIval() = default;
    CIval(RIval r, RIval i) : re(std::move(r)), im(std::move(i)) {}
    static CIval from_real(const RIval& r);

    CIval operator+(const CIval& o) const { return {re + o.re, im + o.im}; }
    CIval operator-(const CIval& o) const { return {re - o.re, im - o.im}; }
    CIval operator*(const CIval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RIval abs2() const { return re.sq() + im.sq(); }
    RIval abs() const { return abs2().sqrt(); }
};

// Interval determinant of a square matrix of RIval (Gaussian elimination with
// midpoint pivoting; enclosure is rigorous).
RIval ival_det(std::vector<std::vector<RIval>> m);

} // namespace ct2

#endif
