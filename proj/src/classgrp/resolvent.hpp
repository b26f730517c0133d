#ifndef CT2_CLASSGRP_RESOLVENT_HPP
#define CT2_CLASSGRP_RESOLVENT_HPP

#include "classgrp/classgroup.hpp"

namespace ct2 {

// Classical resolvent cubic of a monic irreducible quartic; throws
// ResolventReducible when the resolvent is not a field (etale case).
ZPoly cubic_resolvent(const ZPoly& quartic);

struct QuarticH2Compare {
    Int h2_K, h2_F;
    long log2_ratio = 0; // rk2(K) - rk2(F)
    unsigned omega_discK = 0;
    Int disc_K, disc_F;
};

QuarticH2Compare quartic_h2_compare(const ZPoly& quartic);

} // namespace ct2

#endif
