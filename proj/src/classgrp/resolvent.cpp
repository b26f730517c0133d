#include "classgrp/resolvent.hpp"

#include "base/error.hpp"

namespace ct2 {

ZPoly cubic_resolvent(const ZPoly& quartic) {
    check(quartic.degree() == 4 && quartic.is_monic(), errc::usage, "resolvent: need a monic quartic");
    check(is_irreducible(quartic), errc::usage, "resolvent: quartic must be irreducible");
    const Int& p = quartic.c[3];
    const Int& q = quartic.c[2];
    const Int& r = quartic.c[1];
    const Int& s = quartic.c[0];
    // y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2)
    ZPoly res{{-(p * p * s - 4 * q * s + r * r), p * r - 4 * s, -q, Int(1)}};
    if (!is_irreducible(res))
        fail(errc::resolvent_reducible, "resolvent cubic is reducible (etale algebra, not a field)");
    return res;
}

QuarticH2Compare quartic_h2_compare(const ZPoly& quartic) {
    ZPoly res = cubic_resolvent(quartic);
    NumberField K(quartic);
    NumberField F(res);
    QuarticH2Compare out;
    out.disc_K = K.disc();
    out.disc_F = F.disc();
    check(abs(out.disc_F) <= abs(out.disc_K), errc::theorem_violation,
          "|disc F| > |disc K| for a resolvent field");
    ClassGroup cgK(K), cgF(F);
    out.h2_K = cgK.torsion_count(Int(2));
    out.h2_F = cgF.torsion_count(Int(2));
    out.log2_ratio = static_cast<long>(cgK.rank2()) - static_cast<long>(cgF.rank2());
    out.omega_discK = omega(K.disc());
    return out;
}

} // namespace ct2
