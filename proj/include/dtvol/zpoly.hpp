#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "dtvol/errors.hpp"

namespace dtvol {

/// Complex-coefficient univariate polynomial, constant term first.
///
/// Trailing coefficients below 1e-14 of the largest magnitude are trimmed on
/// construction and after every arithmetic operation, so `degree()` is the
/// numerical degree. The zero polynomial has no coefficients and degree -1.
class ZPoly {
 public:
  static constexpr double kTrimRelative = 1e-14;

  ZPoly() = default;
  explicit ZPoly(std::vector<cplx> coeffs);
  ZPoly(std::initializer_list<cplx> coeffs);

  static ZPoly constant(cplx c) { return ZPoly({c}); }
  /// The identity polynomial z.
  static ZPoly identity() { return ZPoly({cplx{0.0}, cplx{1.0}}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : cplx{}; }
  cplx leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx z) const noexcept;
  /// Value and first derivative by one Horner pass.
  std::pair<cplx, cplx> eval_with_derivative(cplx z) const noexcept;
  ZPoly derivative() const;

  ZPoly& operator+=(const ZPoly& rhs);
  ZPoly& operator-=(const ZPoly& rhs);
  ZPoly& operator*=(cplx s);

  friend ZPoly operator+(ZPoly lhs, const ZPoly& rhs) { return lhs += rhs; }
  friend ZPoly operator-(ZPoly lhs, const ZPoly& rhs) { return lhs -= rhs; }
  friend ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs);
  friend ZPoly operator*(ZPoly p, cplx s) { return p *= s; }
  friend ZPoly operator*(cplx s, ZPoly p) { return p *= s; }
  friend ZPoly operator-(ZPoly p) { return p *= cplx{-1.0}; }

 private:
  void trim();

  std::vector<cplx> coeffs_;
};

}  // namespace dtvol
