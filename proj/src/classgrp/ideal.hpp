#ifndef CT2_CLASSGRP_IDEAL_HPP
#define CT2_CLASSGRP_IDEAL_HPP

#include <optional>
#include <vector>

#include "field/field.hpp"

namespace ct2 {

// Fractional ideal as num/den: num is the canonical row-HNF basis (over the
// integral basis of O_K) of the integral ideal den*I; gcd(content(num), den)=1.
struct FracIdeal {
    ZMat num;
    Int den = 1;

    bool operator==(const FracIdeal& o) const { return den == o.den && num == o.num; }
    bool operator<(const FracIdeal& o) const {
        if (den != o.den) return den < o.den;
        return num.a < o.num.a;
    }
    bool is_integral() const { return den == 1; }
};

FracIdeal ideal_one(const NumberField& K);
FracIdeal ideal_canonical(const NumberField& K, ZMat rows, Int den); // HNF + normalize
FracIdeal ideal_from_elem(const NumberField& K, const Elem& a);
// span of a*O + b*O etc.
FracIdeal ideal_from_gens(const NumberField& K, const std::vector<Elem>& gens);
FracIdeal ideal_from_int(const NumberField& K, const Int& a);

FracIdeal ideal_mul(const NumberField& K, const FracIdeal& I, const FracIdeal& J);
FracIdeal ideal_mul_elem(const NumberField& K, const FracIdeal& I, const Elem& a, const Int& aden);
FracIdeal ideal_inv(const NumberField& K, const FracIdeal& I);
FracIdeal ideal_pow(const NumberField& K, const FracIdeal& I, long e);

Rat ideal_norm(const NumberField& K, const FracIdeal& I); // positive rational
bool ideal_contains(const NumberField& K, const FracIdeal& I, const Elem& x);

// Z-basis of I as field elements over a common denominator (the rows of num).
std::vector<Elem> ideal_basis_elems(const NumberField& K, const FracIdeal& I);

// LLL-short elements of the integral ideal I (den must be 1): the reduced
// basis vectors, shortest first by certified comparison.
std::vector<Elem> ideal_short_elems(const NumberField& K, const FracIdeal& I, long bits = 128);

// Deterministic canonical integral representative of the class of I:
// J = gamma*I with gamma the lex-least certified-shortest vector of I^{-1}.
FracIdeal ideal_class_canonical_rep(const NumberField& K, const FracIdeal& I);

} // namespace ct2

#endif
