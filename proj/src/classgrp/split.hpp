#ifndef CT2_CLASSGRP_SPLIT_HPP
#define CT2_CLASSGRP_SPLIT_HPP

#include "classgrp/ideal.hpp"

namespace ct2 {

struct PrimeIdeal {
    Int p;
    FracIdeal P;
    int e = 1, f = 1;
    // tau in P^{-1} \ O_K, as tau_num/tau_den: multiplying by tau drops the
    // P-valuation by exactly 1 and no other valuation.
    Elem tau_num;
    Int tau_den = 1;
};

// Prime ideals above p with ramification/residue data; sorted canonically.
// Uses polynomial factorization mod p when p is coprime to the index, the
// F_p-algebra splitting of O_K/pO_K otherwise.
std::vector<PrimeIdeal> split_prime(const NumberField& K, const Int& p);

// Exact valuation v_P(I) for integral I (uses tau).
int ideal_valuation(const NumberField& K, const PrimeIdeal& P, const FracIdeal& I);
int elem_valuation(const NumberField& K, const PrimeIdeal& P, const Elem& x);

// Residue degrees f_i of the primes above p (cheap; no ideals built). For
// p coprime to the index this is the factorization type of f mod p.
std::vector<int> splitting_type(const NumberField& K, const Int& p);

} // namespace ct2

#endif
