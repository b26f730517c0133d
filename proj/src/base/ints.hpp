#ifndef CT2_BASE_INTS_HPP
#define CT2_BASE_INTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ct2 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = u*a + v*b
inline Int gcdext(const Int& a, const Int& b, Int& u, Int& v) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Floor division and the matching remainder (always 0 <= r < |b| for b > 0).
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fdiv_r(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int powmod(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return Int(0);
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

bool is_prime(const Int& n);

// Full factorization, smallest prime first. Uses trial division then
// Brent-cycle Pollard rho; fine for desk-scale inputs.
std::map<Int, unsigned> factorize(const Int& n);

// Number of distinct prime divisors of |n|; omega(0) is an error, omega(+-1)=0.
unsigned omega(const Int& n);

// p-adic valuation of n (n != 0).
unsigned valuation(Int n, const Int& p);

// Primes in [2, bound] by sieve.
std::vector<long> primes_up_to(long bound);

// Kronecker symbol (a|n).
inline int kronecker(const Int& a, const Int& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

// Square root of a mod prime p (p odd, a a QR); Tonelli-Shanks. Returns r with
// r^2 = a mod p, 0 <= r < p. Caller checks solvability via kronecker.
Int sqrtmod(const Int& a, const Int& p);

std::string to_string(const Int& n);

} // namespace ct2

#endif
