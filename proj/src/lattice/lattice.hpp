#ifndef CT2_LATTICE_LATTICE_HPP
#define CT2_LATTICE_LATTICE_HPP

#include <optional>
#include <vector>

#include "field/field.hpp"

namespace ct2 {

// Exact radius base^(1/root); keeps boundary decisions decidable.
struct BoxRadius {
    Rat base;
    unsigned root = 1;

    RIval as_interval(mpfr_prec_t prec) const {
        RIval b = RIval::from_rat(base, prec);
        return root == 1 ? b : b.root_ui(root);
    }
};

// Embedding coordinates of x/den in R^n = R^r x C^s (complex split into two
// real coordinates).
std::vector<RIval> embedding_row(const NumberField& K, const Elem& x, const Int& den, long bits);

// LLL (delta = 0.99) on the rows of an interval matrix; returns the exact
// unimodular transform U (U * rows = reduced). Decisions are taken on
// midpoints at the given precision; exactness of U is unconditional.
ZMat lll_transform(const std::vector<std::vector<RIval>>& rows, mpfr_prec_t prec);

// Apply LLL to lattice generators given as field elements over a common
// denominator; returns the transformed generators (exact) plus U.
std::vector<Elem> lll_reduce_elems(const NumberField& K, const std::vector<Elem>& gens,
                                   const Int& den, long bits, ZMat* transform = nullptr);

// Complete enumeration of nonzero integer combinations c of the rows with
// quadratic length^2 certainly possibly <= bound2 (a rigorous superset;
// callers do exact filtering). Only one of each +-c pair is returned, with
// the first nonzero entry positive. Throws BudgetExceeded past the budget.
std::vector<std::vector<Int>> enumerate_quadratic(const std::vector<std::vector<RIval>>& rows,
                                                  const RIval& bound2, size_t budget);

// ---- O_K lattice operations ----

struct ReducedBasis {
    std::vector<Elem> vectors;  // v_0 = 1, then v_1 .. v_{n-1}
    std::vector<RIval> lengths; // certified enclosures of |v_i|
    bool exact = true;          // false: LLL approximation (degree above limit)
};

// Greedy shortest-extension basis starting from 1 (exact for n <= exact_limit).
ReducedBasis minkowski_reduce(const NumberField& K, int exact_limit = 6, size_t budget = 10'000'000);

// Exact successive minima lambda_1 <= ... <= lambda_n with realizing vectors.
struct Minima {
    std::vector<Elem> vectors;
    std::vector<RIval> lengths;
};
Minima successive_minima(const NumberField& K, size_t budget = 10'000'000);

struct RegularityReport {
    ReducedBasis basis;
    double ratio_last = 0;    // |v_{n-1}| / |disc|^{1/n}
    double ratio_product = 0; // |v_1|...|v_{n-1}| / |disc|^{1/2}
    ZMat matrix_A;            // (n-2)x(n-2): coefficient of v_{n-1} in v_i*v_j
    bool matrix_A_nondegenerate = false;
    std::vector<size_t> permutation; // pi with a_{i,pi(i)} != 0 (empty if n <= 2)
};
RegularityReport regularity_report(const NumberField& K);

// All x in O_K with |x|_v <= radius for every place v (0 included); complete
// and exact, boundary decided by exact certificates where intervals fail.
std::vector<Elem> enumerate_box(const NumberField& K, const BoxRadius& radius,
                                size_t budget = 10'000'000);

// Covolume of O_K in R^r x C^s as a certified interval; equals
// 2^{-s} sqrt(|disc|).
RIval covolume(const NumberField& K, long bits);

// Certified two-sided Minkowski second-theorem check:
//   (2^n/n!) covol <= V_n * prod(lambda_i) <= 2^n covol.
struct MinkowskiCheck {
    bool lower_ok = false, upper_ok = false;
    double product = 0, covol = 0;
};
MinkowskiCheck minkowski_second_check(const NumberField& K, const Minima& minima);

// Decide |x|_v <= base^(1/root) at every place: 1 = inside (or boundary),
// 0 = outside, using interval refinement plus exact boundary certificates.
bool box_contains(const NumberField& K, const Elem& x, const BoxRadius& radius);

} // namespace ct2

#endif
