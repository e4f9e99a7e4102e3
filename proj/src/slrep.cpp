#include "dtvol/slrep.hpp"

#include <algorithm>
#include <cmath>

namespace dtvol {

namespace {

void require_admissible(const FreeWord& W) {
  if (!is_admissible(W))
    throw InadmissibleWord("relator word '" + W.ascii() + "' does not satisfy tilde(W) = W^-1");
}

void require_nonzero_r(const RepPoint& pt) {
  if (pt.r() == cplx{}) throw PoleAtAbelianLocus("r = 2 - z vanishes; only the Riley form is defined at z = 2");
}

}  // namespace

double Mat2C::max_abs() const {
  return std::max({std::abs(e11), std::abs(e12), std::abs(e21), std::abs(e22)});
}

RepPoint::RepPoint(cplx M, cplx z) : M_(M), z_(z) {
  if (M == cplx{}) throw InvalidArgument("meridian eigenvalue M must be nonzero");
}

std::pair<Mat2C, Mat2C> rho_generators(const RepPoint& pt) {
  const cplx M = pt.M();
  const cplx Mi = 1.0 / M;
  return {Mat2C{M, 1.0, 0.0, Mi}, Mat2C{M, 0.0, pt.r(), Mi}};
}

Mat2C rho_word(const FreeWord& u, const RepPoint& pt) {
  const auto [A, B] = rho_generators(pt);
  const Mat2C Ai = A.adjugate();
  const Mat2C Bi = B.adjugate();
  Mat2C acc = Mat2C::identity();
  for (const Letter& l : u.letters()) {
    if (l.gen == Gen::a)
      acc = acc * (l.exp > 0 ? A : Ai);
    else
      acc = acc * (l.exp > 0 ? B : Bi);
  }
  return acc;
}

cplx riley_poly_value(const FreeWord& W, const RepPoint& pt) {
  require_admissible(W);
  const Mat2C w = rho_word(W, pt);
  const cplx M = pt.M();
  return w.e11 - (M - 1.0 / M) * w.e12;
}

cplx le_poly_value(const FreeWord& W, const RepPoint& pt) {
  require_admissible(W);
  require_nonzero_r(pt);
  const Mat2C w = rho_word(W, pt);
  const cplx M = pt.M();
  return w.e11 - (M * w.e12 - w.e21 / (M * pt.r()));
}

Mat2C mednykh_C(const RepPoint& pt, int branch) {
  require_nonzero_r(pt);
  const cplx s = (branch < 0 ? -1.0 : 1.0) * std::sqrt(pt.r());
  return {0.0, -1.0 / s, s, 0.0};
}

cplx mednykh_poly_value(const FreeWord& W, const RepPoint& pt, int branch) {
  require_admissible(W);
  const Mat2C C = mednykh_C(pt, branch);
  const cplx s = C.e21;
  const Mat2C bw = rho_word(FreeWord::b() * W, pt);
  return -(bw * C).trace() / s;
}

double relator_residual(const FreeWord& w, int n, const RepPoint& pt) {
  const FreeWord wn = w.power(n);
  return (rho_word(wn * FreeWord::a(), pt) - rho_word(FreeWord::b() * wn, pt)).max_abs();
}

}  // namespace dtvol
