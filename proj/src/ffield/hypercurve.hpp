#ifndef CT2_FFIELD_HYPERCURVE_HPP
#define CT2_FFIELD_HYPERCURVE_HPP

#include <optional>

#include "ffield/ffq.hpp"

namespace ct2 {

// Shared field registry (fields are immutable; building tables is costly).
const GF& gf_cache(long p, int m);
// cached embedding exponent between cached fields
long gf_embedding(const GF& small, const GF& big);

// y^2 = f(x) over F_q, f separable of degree 2g+1 or 2g+2, odd q.
struct HyperCurve {
    long p = 3;
    int k = 1; // q = p^k
    long q = 3;
    GFPoly f;
    int genus = 1;
    bool odd_degree_model = true;

    const GF& field() const { return gf_cache(p, k); }
};

// Parse "q;c0,c1,..." (integer coefficients mapped into F_q via the prime
// field; q must be a power of an odd prime). For coefficients outside the
// prime field use "g<k>" tokens meaning the k-th power of the generator.
HyperCurve parse_curve(const std::string& line);
std::string format_curve(const HyperCurve& c);

HyperCurve make_curve(long p, int k, const GFPoly& f);

// Projective smooth-model point count over F_{q^i}.
long count_points(const HyperCurve& c, int i);

struct LPolynomial {
    std::vector<Int> a; // a_0 = 1 .. a_{2g}
    Int L1() const {
        Int s = 0;
        for (const auto& x : a) s += x;
        return s;
    }
};

// Zeta numerator from N_1..N_g; validated by predicting N_{g+1} and
// recounting (ZetaInconsistent alarm on mismatch).
LPolynomial l_polynomial(const HyperCurve& c);

// max |abs(reciprocal root) - sqrt(q)| over the roots, certified enclosure
// midpoint (for the 1e-6 Weil check).
double weil_deviation(const LPolynomial& L, long q);

struct TwoTorsionData {
    std::vector<int> cycle_type; // degrees of the irreducible factors of f
    int dim2 = 0;
    Int size() const { return pow_ui(Int(2), static_cast<unsigned long>(dim2)); }
};

TwoTorsionData two_torsion_size(const HyperCurve& c);

struct H0SquareReport {
    long projective_count = 0; // |P H^0(C,2E)^sq|
    long induced_classes = 0;  // distinct 2-torsion classes hit
    Int h0_size;               // |H^0(C,2E)| = q^{g+1}
    bool surjective = false;
};

// Odd-degree model only (EvenDegreeModel otherwise).
H0SquareReport h0_square_classes(const HyperCurve& c);

struct CurveBoundsReport {
    Int torsion2;
    Int first_bound; // (q^{g+1}-1)/(q-1)
    bool first_ok = false;
    double gonality_ratio = 0; // size / q^{g/2}
};

CurveBoundsReport verify_bounds(const HyperCurve& c);

// Exhaustive curve enumeration for sweeps: all separable f of degree exactly
// d over F_q (both leading-coefficient classes), deterministic order.
std::vector<GFPoly> all_separable_polys(const GF& F, int d);

} // namespace ct2

#endif
