#ifndef CT2_BOUNDS_BOUNDS_HPP
#define CT2_BOUNDS_BOUNDS_HPP

#include <string>
#include <vector>

#include "base/interval.hpp"
#include "base/polyz.hpp"

namespace ct2 {

// beta = ((1+a)/2a) log((1+a)/2a) - ((1-a)/2a) log((1-a)/2a) at a = sqrt(3)/2.
// Certified enclosure at >= the requested bits.
RIval hv_beta(long bits = 64);

// 1 / (6 (1 - beta/log 2)); also the fixed point of x = 1/6 + (beta/log2) x.
RIval h2_exponent_cubic(long bits = 64);

struct ExponentTable {
    double alpha;           // sqrt(3)/2
    double beta_hv;         // 0.2783...
    double h2_exp_cubic;    // 0.2784...
    double points_exp;      // 0.1117...
    double a4_exp;          // 0.7784...
    double fixed_point_residual; // |x - (1/6 + (beta/log2) x)|
    // delta_n = 1/(2n) for n > 4; h2_exp(n) = sel2_exp(n) = 1/2 - delta_n,
    // with the cubic/quartic improvement at n = 3, 4.
    double delta_n(int n) const;
    double h2_exp(int n) const;
    double sel2_exp(int n) const { return h2_exp(n); }
};

ExponentTable derived_exponents(long bits = 128);

struct BKInput {
    ZPoly cubic; // y^2 = f(x), monic integral cubic
    Int disc_E;  // 16 * disc(f)
    unsigned omega_disc = 0;
    unsigned rk2_cl = 0; // 2-rank of Cl(Q[x]/(f))
};

// Assemble the input data (throws ReducibleCubic for reducible f) given the
// 2-rank of the class group of the cubic field.
BKInput bk_input(const ZPoly& cubic, unsigned rk2_cl);

// rk2(Cl) + 2 omega(|disc E|) + 2.
Int bk_rank_bound(const BKInput& in);

// |disc E|^eps * e^{(beta+eps) rank}; shape-only bound with constant 1.
double hv_point_bound(long rank, const Int& disc_E, double eps);

struct BailyRow {
    Int disc;
    Int h2;
};

// sum h2 log^2|disc| (X/|disc|)^{1/2} over rows with 0 < |disc| < X,
// evaluated to 1e-9 relative accuracy.
double baily_sum(const std::vector<BailyRow>& table, double X);

// parse "disc,h2" CSV lines ('#' comments); throws BadTableRow.
std::vector<BailyRow> parse_cubic_table(const std::string& text);

} // namespace ct2

#endif
