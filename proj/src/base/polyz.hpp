#ifndef CT2_BASE_POLYZ_HPP
#define CT2_BASE_POLYZ_HPP

#include <string>
#include <vector>

#include "base/ints.hpp"

namespace ct2 {

// Dense integer polynomial, c[i] = coefficient of x^i. Normalized: no
// trailing zeros (the zero polynomial has empty c).
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static ZPoly constant(const Int& a) { return a == 0 ? ZPoly{} : ZPoly{{a}}; }
    static ZPoly x_power(size_t k);

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool operator==(const ZPoly& o) const { return c == o.c; }

    Int operator()(const Int& x) const;   // Horner
    Rat operator()(const Rat& x) const;

    std::string str(const std::string& var = "x") const;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const Int& k, const ZPoly& a);
ZPoly operator-(const ZPoly& a);

ZPoly derivative(const ZPoly& a);
Int content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);

// Exact division; requires b | a in Z[x] (monic b or exact divisibility).
ZPoly divexact(const ZPoly& a, const ZPoly& b);
// Euclidean division by a monic divisor.
void divrem_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);
// True exact divisibility test over Q[x] (content-insensitive): b | a up to rationals.
bool divides_q(const ZPoly& b, const ZPoly& a);

// Subresultant-based exact routines.
Int resultant(const ZPoly& a, const ZPoly& b);
ZPoly gcd(const ZPoly& a, const ZPoly& b); // primitive gcd, positive leading coeff
Int discriminant(const ZPoly& a);

// Squarefree part (primitive, positive leading coefficient).
ZPoly squarefree_part(const ZPoly& a);

// If a = k * s^2 for rational k and s in Q[x], returns true and sets s
// (primitive integer, positive lead) and k. Detects perfect-square shape.
bool square_decompose(const ZPoly& a, ZPoly& s, Rat& k);

// a(x + t)
ZPoly shift(const ZPoly& a, const Int& t);
// a(-x)
ZPoly reflect(const ZPoly& a);

// Roots in Z of a (exact, via divisor search on the constant term).
std::vector<Int> integer_roots(const ZPoly& a);

// Certified irreducibility over Q and full factorization over Z (monic input).
// Implemented in field/rootcert.cpp (needs certified complex roots).
bool is_irreducible(const ZPoly& monic);
std::vector<ZPoly> factor_monic(const ZPoly& monic); // monic irreducible factors, with multiplicity

// Parse "c0,c1,...,cn" (constant term first).
ZPoly parse_poly(const std::string& line);
std::string format_poly(const ZPoly& p); // inverse of parse_poly

} // namespace ct2

#endif
