#include "dtvol/longitude.hpp"

#include <cmath>

#include "dtvol/chebyshev.hpp"
#include "dtvol/riley.hpp"
#include "dtvol/slrep.hpp"

namespace dtvol {

std::pair<cplx, cplx> longitude_pair(const KnotParam& knot, cplx z) {
  const int m = knot.m();
  const auto [sm, sm1] = detail::chebyshev_pair(m, z, cplx{1.0}, cplx{});
  if (knot.family() == Family::odd) return {sm, sm1};
  const cplx sm2 = z * sm1 - sm;
  return {sm - sm1, sm1 - sm2};
}

double imcond(const KnotParam& knot, cplx z) {
  const auto [A, B] = longitude_pair(knot, z);
  return (A * std::conj(B)).imag();
}

cplx longitude_L(const KnotParam& knot, cplx z, cplx M) {
  if (M == cplx{}) throw InvalidArgument("meridian eigenvalue M must be nonzero");
  const auto [A, B] = longitude_pair(knot, z);
  const cplx Mi = 1.0 / M;
  const cplx num = Mi * A - M * B;
  const cplx den = M * A - Mi * B;
  const double scale = std::abs(M * A) + std::abs(Mi * B);
  if (std::abs(den) <= 1e-14 * scale || scale == 0.0)
    throw DegenerateLongitude("longitude eigenvalue denominator vanishes for " + knot.name());
  cplx L = -num / den;
  if (knot.family() == Family::odd) L *= std::pow(M, -4 * knot.n);
  return L;
}

cplx longitude_L_via_w12(const KnotParam& knot, cplx z, cplx M) {
  const cplx w12 = prop_w_matrix(knot.k, RepPoint(M, z)).e12;
  const cplx w12_tilde = prop_w_matrix(knot.k, RepPoint(1.0 / M, z)).e12;
  if (w12 == cplx{}) throw DegenerateLongitude("w12 vanishes for " + knot.name());
  cplx L = -w12_tilde / w12;
  if (knot.family() == Family::odd) L *= std::pow(M, -4 * knot.n);
  return L;
}

}  // namespace dtvol
