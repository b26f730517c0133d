#ifndef CT2_BASE_MODPOLY_HPP
#define CT2_BASE_MODPOLY_HPP

#include <cstdint>
#include <vector>

#include "base/ints.hpp"
#include "base/polyz.hpp"

namespace ct2 {

// Polynomials over F_p (p an odd or even prime, mpz-sized). Coefficients are
// kept reduced into [0, p). Vectors have no trailing zeros.
using FpPoly = std::vector<Int>;

FpPoly fp_reduce(const ZPoly& f, const Int& p);
ZPoly fp_lift(const FpPoly& f); // coefficients as-is

int fp_deg(const FpPoly& f);
FpPoly fp_trim(FpPoly f);
bool fp_eq(const FpPoly& a, const FpPoly& b);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const Int& p);
void fp_divrem(const FpPoly& a, const FpPoly& b, const Int& p, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m, const Int& p);
FpPoly fp_monic(const FpPoly& a, const Int& p);
FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p);
FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m, const Int& p);
FpPoly fp_derivative(const FpPoly& a, const Int& p);

struct FpFactor {
    FpPoly poly;
    unsigned multiplicity;
    bool operator<(const FpFactor& o) const;
};

// Full factorization into monic irreducibles (squarefree + distinct-degree +
// equal-degree); deterministic output order. rng_seed drives the Cantor-
// Zassenhaus splits; results are canonical regardless of seed.
std::vector<FpFactor> fp_factor(const FpPoly& f, const Int& p, uint64_t rng_seed = 1);

// Degrees of the irreducible factors of the squarefree f (faster than full
// factorization; distinct-degree only). Sorted ascending.
std::vector<int> fp_factor_degrees_squarefree(const FpPoly& f, const Int& p);

bool fp_is_irreducible(const FpPoly& f, const Int& p);

// Roots in F_p of a split polynomial (all roots in F_p); general f allowed,
// returns the distinct roots of gcd(f, x^p - x).
std::vector<Int> fp_roots(const FpPoly& f, const Int& p, uint64_t rng_seed = 1);

// Dense F_p matrix utilities (row major).
struct FpMat {
    size_t rows = 0, cols = 0;
    Int p;
    std::vector<Int> a;

    FpMat() = default;
    FpMat(size_t r, size_t c, Int prime) : rows(r), cols(c), p(std::move(prime)), a(r * c, Int(0)) {}
    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns rank and (optionally) pivot cols.
size_t fp_rref(FpMat& m, std::vector<size_t>* pivots = nullptr);
// Basis of the left kernel {x : x*A = 0} as rows.
FpMat fp_left_kernel(const FpMat& A);
FpMat fp_mul(const FpMat& A, const FpMat& B);

} // namespace ct2

#endif
