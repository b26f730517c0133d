#ifndef CT2_BOXCOUNT_BOXCOUNT_HPP
#define CT2_BOXCOUNT_BOXCOUNT_HPP

#include "classgrp/classgroup.hpp"
#include "lattice/lattice.hpp"
#include "smallrep/smallrep.hpp"

namespace ct2 {

// One coset beta + Z inside the box, with its norm form data.
struct NormLine {
    Elem base;        // canonical representative: coordinate of 1 is zero
    ZPoly f_beta;     // f(t) = Norm(beta - t), degree n
    ZPoly g_beta;     // squarefree part of (-1)^n f_beta(-x), primitive, lead > 0
    bool is_square_poly = false;
    bool degenerate = false; // beta rational: the line of Z itself
    long points_on_line = 0; // box points in this coset
};

struct BoxCensus {
    Int radius_base;  // radius = |disc|^{1/n}: radius_base = |disc|
    long total = 0;   // box points including 0
    long square_norm = 0; // nonzero points with square |norm|
    std::vector<NormLine> lines;
    long square_lines = 0;
    long degenerate_lines = 0;
};

BoxCensus box_census(const NumberField& K, size_t budget = 10'000'000);

// total / |disc|^{1/2}
double trivial_bound_ratio(const NumberField& K, const BoxCensus& c);

// Cubic normal form: sign * y^2 = x^3 + A x^2 + B x + C (sign in {+1,-1}).
struct CurveSpec {
    int sign = -1;
    Int A, B, C;
    bool degenerate = false; // g_beta has degree < 3
};

// Cubic fields only; throws SquareLine for square-polynomial lines.
CurveSpec line_to_curve(const NumberField& K, const NormLine& line);

// Brute-force integral points: all (x, y), |x| <= x_bound, |y| <= y_bound,
// y^2 = g(x). Complete; both signs of y listed (y = 0 once).
std::vector<std::pair<Int, Int>> curve_integral_points(const ZPoly& g, const Int& x_bound,
                                                       const Int& y_bound,
                                                       size_t budget = 100'000'000);
// Independent second implementation (quadratic-residue sieve, then exact).
std::vector<std::pair<Int, Int>> curve_integral_points_sieve(const ZPoly& g, const Int& x_bound,
                                                             const Int& y_bound,
                                                             size_t budget = 100'000'000);

struct SurjectionReport {
    Int h2;
    long square_norm_count = 0;
    bool ok = false; // h2 <= square_norm_count and all witnesses verified in B
    long witnesses_in_box = 0;
};

// For every 2-torsion class: witness beta lies in B and has square |norm|;
// distinct classes yield distinct (beta); hence h2 <= square-norm census.
SurjectionReport surjection_check(const NumberField& K, const ClassGroup& cg, const BoxCensus& c);

// Least-squares slope of log(count) vs log|disc|; throws InsufficientData
// below 20 points.
struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0; // RMS residual in log space
    size_t points = 0;
};
ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& disc_count_pairs);

} // namespace ct2

#endif
