#include "base/ints.hpp"

#include "base/error.hpp"

namespace ct2 {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 2 = definitely prime, 1 = probable. GMP's test is BPSW + extra rounds;
    // no counterexample is known below 2^64, which covers desk scale.
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n, unsigned long c0) {
    // Brent's variant.
    if (n % 2 == 0) return Int(2);
    Int y = 2, c = c0, m = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = std::min(m, Int(r - k));
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        }
    }
    return g;
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Int d = n;
    for (unsigned long c = 1; d == n; ++c) d = pollard_rho(n, c);
    factor_rec(d, out);
    factor_rec(divexact(n, d), out);
}

} // namespace

std::map<Int, unsigned> factorize(const Int& n_in) {
    check(n_in != 0, errc::internal, "factorize(0)");
    Int n = abs(n_in);
    std::map<Int, unsigned> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            out[Int(p)]++;
            n = divexact(n, Int(p));
        }
    }
    // Trial division by 6k+-1 up to 10^5, then rho for what is left.
    for (long p = 17; p <= 100000 && n > 1; p += (p % 6 == 5) ? 2 : 4) {
        if (Int(p) * p > n) break;
        while (n % p == 0) {
            out[Int(p)]++;
            n = divexact(n, Int(p));
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            out[n]++;
        } else {
            factor_rec(n, out);
        }
    }
    return out;
}

unsigned omega(const Int& n) {
    check(n != 0, errc::internal, "omega(0)");
    if (n == 1 || n == -1) return 0;
    return static_cast<unsigned>(factorize(n).size());
}

unsigned valuation(Int n, const Int& p) {
    check(n != 0, errc::internal, "valuation of 0");
    unsigned v = 0;
    n = abs(n);
    while (n % p == 0) {
        n = divexact(n, p);
        ++v;
    }
    return v;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (sieve[static_cast<size_t>(i)]) {
            out.push_back(i);
            for (long j = 2 * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
        }
    }
    return out;
}

Int sqrtmod(const Int& a_in, const Int& p) {
    Int a = fdiv_r(a_in, p);
    if (a == 0) return Int(0);
    if (p == 2) return a;
    check(kronecker(a, p) == 1, errc::internal, "sqrtmod: not a QR");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks.
    Int q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (kronecker(z, p) != -1) ++z;
    Int m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        unsigned i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = Int(i);
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::string to_string(const Int& n) { return n.get_str(); }

} // namespace ct2
