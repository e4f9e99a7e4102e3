#include "dtvol/chebyshev.hpp"

#include <string>

namespace dtvol {

cplx eval_S(int j, cplx omega) {
  return detail::chebyshev_pair(j, omega, cplx{1.0}, cplx{}).first;
}

ChebPair eval_pair(int j, cplx omega) {
  auto [s, sm1] = detail::chebyshev_pair(j, omega, cplx{1.0}, cplx{});
  return {s, sm1, j, omega};
}

ZPoly coeffs_S(int j) {
  if (j < -2) throw InvalidArgument("coeffs_S: index must be >= -2, got " + std::to_string(j));
  return compose_S(j, ZPoly::identity()).first;
}

std::pair<ZPoly, ZPoly> compose_S(int j, const ZPoly& t) {
  return detail::chebyshev_pair(j, t, ZPoly::constant(1.0), ZPoly{});
}

}  // namespace dtvol
