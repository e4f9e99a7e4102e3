#pragma once

#include <utility>

#include "dtvol/errors.hpp"
#include "dtvol/words.hpp"

namespace dtvol {

/// The pair (A, B) with |L| = |A - M^2 B| / |M^2 A - B| on the unit circle:
/// (S_m, S_{m-1}) for odd k, (S_m - S_{m-1}, S_{m-1} - S_{m-2}) for even k.
std::pair<cplx, cplx> longitude_pair(const KnotParam& knot, cplx z);

/// Im(A conj(B)). The branch condition requires this to be <= 0, which is
/// equivalent to |L| >= 1 for 0 < omega < pi.
double imcond(const KnotParam& knot, cplx z);

/// Upper-left entry L of rho(longitude):
///   odd:  L = -M^{-4n} (M^-1 A - M B) / (M A - M^-1 B)
///   even: L = -(M^-1 A - M B) / (M A - M^-1 B)
/// Throws DegenerateLongitude when the denominator vanishes.
cplx longitude_L(const KnotParam& knot, cplx z, cplx M);

/// Independent route: L = -w~12 / w12 (times M^{-4n} for odd k), where w12 is
/// the upper-right entry of rho(w) and w~12 the same entry with M -> M^-1.
cplx longitude_L_via_w12(const KnotParam& knot, cplx z, cplx M);

}  // namespace dtvol
