#ifndef CT2_FIELD_ROOTCERT_HPP
#define CT2_FIELD_ROOTCERT_HPP

#include <vector>

#include "base/interval.hpp"
#include "base/polyz.hpp"

namespace ct2 {

// Number of real roots of a squarefree polynomial (exact, Sturm).
int count_real_roots(const ZPoly& f);

// One certified root enclosure of a squarefree integer polynomial. Real roots
// carry an exact isolating rational interval; complex ones (upper half plane
// only) carry a certified disk that contains exactly one root.
struct RootBox {
    bool is_real = true;
    RIval re, im; // im == [0,0] for real roots

    CIval as_cival() const { return {re, im}; }
};

// Certified, conjugation-closed root system of a squarefree integer
// polynomial: first r real roots in ascending order, then s complex roots
// (positive imaginary part) ordered by (re, im). Enclosures are pairwise
// disjoint and each contains exactly one root; refine() tightens them.
class RootSystem {
  public:
    RootSystem() = default;
    static RootSystem isolate(const ZPoly& squarefree, long bits);

    const ZPoly& poly() const { return poly_; }
    int r() const { return r_; }
    int s() const { return s_; }
    long bits() const { return bits_; }
    const std::vector<RootBox>& roots() const { return boxes_; }

    // Tighten every enclosure to radius <= 2^-bits; monotone.
    void refine(long bits);

    // Evaluate sum_j coeff[j] z^j / den over every root (r real + s complex).
    std::vector<CIval> eval_at_roots(const std::vector<Int>& coeff, const Int& den) const;

  private:
    ZPoly poly_;
    int r_ = 0, s_ = 0;
    long bits_ = 0;
    std::vector<RootBox> boxes_;
    // exact isolating intervals for real roots (signs of f differ at ends)
    std::vector<std::pair<Rat, Rat>> real_isolation_;
    // midpoints of certified complex roots, as exact dyadic rationals
    std::vector<std::pair<Rat, Rat>> complex_centers_;

    void rebuild_boxes(long bits);
};

} // namespace ct2

#endif
