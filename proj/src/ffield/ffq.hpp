#ifndef CT2_FFIELD_FFQ_HPP
#define CT2_FFIELD_FFQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "base/ints.hpp"

namespace ct2 {

// Small finite field F_{p^m} (odd p) with exp/log and Zech tables. Elements
// are encoded as: -1 = zero, otherwise the discrete log in [0, q-2] of a
// fixed generator.
class GF {
  public:
    using El = int32_t;
    static constexpr El zero = -1;

    GF(long p, int m);

    long p() const { return p_; }
    int m() const { return m_; }
    long q() const { return q_; }

    El one() const { return 0; }
    bool is_zero(El a) const { return a < 0; }
    El add(El a, El b) const;
    El neg(El a) const;
    El sub(El a, El b) const { return add(a, neg(b)); }
    El mul(El a, El b) const {
        if (a < 0 || b < 0) return zero;
        return static_cast<El>((a + b) % (q_ - 1));
    }
    El inv(El a) const;
    El div(El a, El b) const { return mul(a, inv(b)); }
    El pow(El a, long e) const;
    El from_int(long k) const; // image of the rational integer k
    bool is_square(El a) const {
        if (a < 0) return true;
        return q_ % 2 == 1 ? a % 2 == 0 : true;
    }
    El frobenius(El a) const { return pow(a, p_); } // x -> x^p

    // all elements (zero first, then generator powers): for exhaustive loops
    std::vector<El> elements() const;

    // Field embedding into an extension with m | bigger.m: the generator maps
    // to a root of its minimal polynomial, so the map is additive too.
    long embedding_exponent(const GF& bigger) const; // g -> g_B^e
    El embed_into(const GF& bigger, long e, El a) const {
        if (a < 0) return zero;
        return static_cast<El>((static_cast<long>(a) * e) % (bigger.q() - 1));
    }
    const std::vector<long>& generator_minpoly() const { return gen_minpoly_; }

  private:
    long p_;
    int m_;
    long q_;
    std::vector<El> zech_; // zech_[k] = log(1 + g^k), -1 if it is zero
    std::vector<El> int_image_; // images of 0..p-1
    std::vector<long> gen_minpoly_; // monic, coefficients in [0,p), constant first
};

// Dense polynomial over GF, constant first, no trailing zeros.
using GFPoly = std::vector<GF::El>;

GFPoly gf_trim(GFPoly f);
int gf_deg(const GFPoly& f);
GFPoly gf_add(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gf_sub(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gf_mul(const GF& F, const GFPoly& a, const GFPoly& b);
GFPoly gf_mul_scalar(const GF& F, const GFPoly& a, GF::El c);
void gf_divrem(const GF& F, const GFPoly& a, const GFPoly& b, GFPoly& q, GFPoly& r);
GFPoly gf_mod(const GF& F, const GFPoly& a, const GFPoly& m);
GFPoly gf_gcd(const GF& F, GFPoly a, GFPoly b); // monic
// g = gcd, and s,t with s*a + t*b = g
GFPoly gf_gcdext(const GF& F, const GFPoly& a, const GFPoly& b, GFPoly& s, GFPoly& t);
GFPoly gf_monic(const GF& F, const GFPoly& a);
GFPoly gf_powmod(const GF& F, const GFPoly& a, long e, const GFPoly& m);
GFPoly gf_derivative(const GF& F, const GFPoly& a);
GF::El gf_eval(const GF& F, const GFPoly& a, GF::El x);
bool gf_is_squarefree(const GF& F, const GFPoly& f);

// Monic irreducible factors with multiplicity (deterministic order).
struct GFFactor {
    GFPoly poly;
    int multiplicity;
};
std::vector<GFFactor> gf_factor(const GF& F, const GFPoly& f, uint64_t seed = 1);

// Degrees of irreducible factors of a squarefree monic f (distinct-degree
// only), ascending.
std::vector<int> gf_factor_degrees(const GF& F, const GFPoly& f);

std::string gf_poly_str(const GF& F, const GFPoly& f); // debugging aid

} // namespace ct2

#endif
