#ifndef CT2_BASE_ABGROUP_HPP
#define CT2_BASE_ABGROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "base/ints.hpp"
#include "base/matz.hpp"

namespace ct2 {

// Structure of a finite abelian group given by a black-box composition on
// canonical element keys. Enumerates the closure of the generators, then
// derives elementary divisors from the full relation lattice of the Cayley
// graph.
struct AbGroupStructure {
    Int order = 1;
    std::vector<Int> divisors;           // d_1 | d_2 | ..., all > 1
    std::vector<std::string> elements;   // all element keys, sorted
    // exponent vector (over the given generators) for each element, aligned
    // with `elements`
    std::vector<std::vector<Int>> dlogs;

    Int torsion_count(const Int& m) const {
        Int t = 1;
        for (const auto& d : divisors) t *= gcd(d, m);
        return t;
    }
    unsigned rank2() const {
        unsigned r = 0;
        for (const auto& d : divisors)
            if (d % 2 == 0) ++r;
        return r;
    }
};

AbGroupStructure
abgroup_structure(const std::string& identity,
                  const std::vector<std::string>& generators,
                  const std::function<std::string(const std::string&, const std::string&)>& compose,
                  size_t budget = 2'000'000);

// Elements of the m-torsion subgroup, as exponent vectors over the SNF
// coordinates d_1..d_k (each entry in [0, d_i)).
std::vector<std::vector<Int>> torsion_exponents(const std::vector<Int>& divisors, const Int& m);

} // namespace ct2

#endif
