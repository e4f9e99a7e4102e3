#pragma once

#include <utility>

#include "dtvol/errors.hpp"
#include "dtvol/words.hpp"

namespace dtvol {

/// 2x2 complex matrix; values of the representation have unit determinant.
struct Mat2C {
  cplx e11{1.0}, e12{}, e21{}, e22{1.0};

  static Mat2C identity() { return {}; }

  cplx det() const { return e11 * e22 - e12 * e21; }
  cplx trace() const { return e11 + e22; }
  /// Adjugate; the inverse whenever det = 1.
  Mat2C adjugate() const { return {e22, -e12, -e21, e11}; }
  double max_abs() const;

  friend Mat2C operator*(const Mat2C& x, const Mat2C& y) {
    return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
            x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
  }
  friend Mat2C operator-(const Mat2C& x, const Mat2C& y) {
    return {x.e11 - y.e11, x.e12 - y.e12, x.e21 - y.e21, x.e22 - y.e22};
  }
  friend Mat2C operator*(cplx s, const Mat2C& x) { return {s * x.e11, s * x.e12, s * x.e21, s * x.e22}; }
};

/// Parameter point (M, z) of the normalized nonabelian representation
///   rho(a) = [M 1; 0 M^-1],  rho(b) = [M 0; 2-z M^-1],
/// with z = tr rho(a b^-1). The variable r = 2 - z is the lower-left entry.
class RepPoint {
 public:
  RepPoint(cplx M, cplx z);

  cplx M() const noexcept { return M_; }
  cplx z() const noexcept { return z_; }
  cplx r() const noexcept { return 2.0 - z_; }
  /// x = tr rho(a) = tr rho(b).
  cplx x() const noexcept { return M_ + 1.0 / M_; }
  /// y = tr rho(a b).
  cplx y() const noexcept { return M_ * M_ + 1.0 / (M_ * M_) + 2.0 - z_; }

 private:
  cplx M_;
  cplx z_;
};

std::pair<Mat2C, Mat2C> rho_generators(const RepPoint& pt);
Mat2C rho_word(const FreeWord& u, const RepPoint& pt);

/// w11 - (M - M^-1) w12 for rho(W) = (w_ij). Throws InadmissibleWord.
cplx riley_poly_value(const FreeWord& W, const RepPoint& pt);

/// w11 - (M w12 - M^-1 r^-1 w21). Throws PoleAtAbelianLocus when r = 0.
cplx le_poly_value(const FreeWord& W, const RepPoint& pt);

/// C = [0 -1/sqrt(r); sqrt(r) 0] for the chosen square-root branch
/// (`branch` = +1 principal, -1 the other one).
Mat2C mednykh_C(const RepPoint& pt, int branch = 1);

/// -tr(rho(b W) C) / sqrt(r); equal to the Le value for either branch.
cplx mednykh_poly_value(const FreeWord& W, const RepPoint& pt, int branch = 1);

/// Max-entry modulus of rho(w^n a) - rho(b w^n).
double relator_residual(const FreeWord& w, int n, const RepPoint& pt);

}  // namespace dtvol
