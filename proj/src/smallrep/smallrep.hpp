#ifndef CT2_SMALLREP_SMALLREP_HPP
#define CT2_SMALLREP_SMALLREP_HPP

#include "classgrp/classgroup.hpp"

namespace ct2 {

// Certificate that the class of I contains a representative I' whose m-th
// power has a generator beta with every archimedean absolute value at most
// |disc|^{m/(2n)}.
struct TorsionWitness {
    FracIdeal ideal;   // I' = kappa * I, integral
    Elem beta;         // generator of I'^m
    unsigned m = 2;
    Elem kappa_num;    // kappa = kappa_num / kappa_den in I^{-1}
    Int kappa_den = 1;
    Elem alpha;        // original generator of I^m
    FracIdeal source;  // the input ideal I
};

// Produce a witness for the torsion class (order must divide m; I^m must be
// principal). Implements the Minkowski-box search for kappa in I^{-1}:
//   |kappa|_v <= |disc|^{1/2n} |alpha|_v^{-1/m}.
// Choice rule: among valid candidates, minimize max_v |beta|_v, ties broken
// lexicographically on the kappa coordinates. EmptyBox signals a theorem
// violation and is never expected.
TorsionWitness small_generator(const NumberField& K, const ClassGroup& cg, const FracIdeal& I,
                               unsigned m);

struct WitnessReport {
    bool valid = false;
    double ratio_max = 0; // max_v |beta|_v / |disc|^{m/2n}, in (0, 1]
    std::string violated; // empty when valid
};

// Independent re-check of all witness invariants at doubled precision.
// Throws WitnessInvalid when throw_on_invalid, else reports the clause.
WitnessReport verify_witness(const NumberField& K, const TorsionWitness& w,
                             bool throw_on_invalid = false);

// Numeric sanity check of the Minkowski volume condition
// vol(box) >= 2^n covol(I^{-1}); returns the ratio vol/(2^n covol).
double minkowski_volume_ratio(const NumberField& K, const FracIdeal& I, const Elem& alpha,
                              unsigned m);

// Reconstruct the SNF class vector of the m-th root of (beta): factor (beta),
// halve the exponents, and locate the class. Used for the class-recovery
// property check.
std::vector<Int> class_vector_from_beta(const NumberField& K, const ClassGroup& cg,
                                        const Elem& beta, unsigned m);

} // namespace ct2

#endif
