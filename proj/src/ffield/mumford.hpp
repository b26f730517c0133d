#ifndef CT2_FFIELD_MUMFORD_HPP
#define CT2_FFIELD_MUMFORD_HPP

#include "base/abgroup.hpp"
#include "ffield/hypercurve.hpp"

namespace ct2 {

// Exhaustive divisor-class-group oracle via reduced Mumford representatives
// and Cantor composition. Needs an odd-degree model; curves with an even
// model but a rational Weierstrass point are transformed first. Budget-guarded
// (intended for q^g <= ~200).
struct PicOracle {
    Int order;
    std::vector<Int> divisors; // elementary divisors > 1
    Int torsion2;              // |Pic^0(F_q)[2]|
    bool transformed = false;  // an even model was moved to an odd one
};

// nullopt when no odd-degree model is available over F_q (even f without a
// rational Weierstrass point).
std::optional<PicOracle> pic_enumerate_oracle(const HyperCurve& c, size_t budget = 4000);

} // namespace ct2

#endif
