#include "dtvol/riley.hpp"

#include <cmath>
#include <cstdlib>

#include "dtvol/chebyshev.hpp"

namespace dtvol {

namespace {

template <class T>
T lift(cplx v);
template <>
cplx lift<cplx>(cplx v) {
  return v;
}
template <>
ZPoly lift<ZPoly>(cplx v) {
  return ZPoly::constant(v);
}

/// Value and first derivative, for evaluating Phi and dPhi/dz together
/// through the recurrences.
struct Jet {
  cplx v, d;
};
Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d + b.d}; }
Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d - b.d}; }
Jet operator*(const Jet& a, const Jet& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
template <>
Jet lift<Jet>(cplx v) {
  return {v, {}};
}

/// S_m, S_{m-1}, S_{m-2} of z together with z itself, over scalars or polynomials.
template <class T>
struct ChebTriple {
  T z;
  T sm;
  T sm1;
  T sm2;
};

template <class T>
ChebTriple<T> cheb_triple(int m, const T& z) {
  auto [sm, sm1] = detail::chebyshev_pair(m, z, lift<T>(1.0), lift<T>(0.0));
  T sm2 = z * sm1 - sm;
  return {z, std::move(sm), std::move(sm1), std::move(sm2)};
}

/// (t, d) of the closed form. X = M^2 + M^-2.
template <class T>
std::pair<T, T> closed_t_d(bool odd, const ChebTriple<T>& c, cplx X) {
  const T one = lift<T>(1.0);
  const T two = lift<T>(2.0);
  const T zx = c.z - lift<T>(X);
  if (odd) {
    T t = lift<T>(X + 2.0) - c.z - (c.z - two) * zx * c.sm * c.sm1;
    T d = one - zx * c.sm * (c.sm - c.sm1);
    return {std::move(t), std::move(d)};
  }
  T t = two + (c.z - two) * zx * c.sm1 * c.sm1;
  T d = one + zx * c.sm1 * (c.sm - c.sm1);
  return {std::move(t), std::move(d)};
}

/// P_1 (odd) or Q_1 (even) of the recursive description.
template <class T>
T recursive_p1(bool odd, const ChebTriple<T>& c, cplx X) {
  const T zx = c.z - lift<T>(X);
  if (odd) return lift<T>(1.0) + zx * c.sm1 * (c.sm - c.sm1);
  return lift<T>(1.0) - zx * c.sm1 * (c.sm1 - c.sm2);
}

template <class T>
T phi_closed(int k, int n, const T& z, cplx M) {
  const cplx X = M * M + 1.0 / (M * M);
  const bool odd = k % 2 != 0;
  const auto c = cheb_triple(k / 2, z);
  const auto [t, d] = closed_t_d(odd, c, X);
  auto [sn, snm1] = detail::chebyshev_pair(n, t, lift<T>(1.0), lift<T>(0.0));
  return sn - d * snm1;
}

template <class T>
T phi_recursive(int k, int n, const T& z, cplx M) {
  const cplx X = M * M + 1.0 / (M * M);
  const bool odd = k % 2 != 0;
  const auto c = cheb_triple(k / 2, z);
  const T t = closed_t_d(odd, c, X).first;
  T p0 = lift<T>(1.0);
  T p1 = recursive_p1(odd, c, X);
  if (n == 0) return p0;
  if (n > 0) {
    // (p0, p1) = (P_{i-1}, P_i)
    for (int i = 1; i < n; ++i) {
      T next = t * p1 - p0;
      p0 = std::move(p1);
      p1 = std::move(next);
    }
    return p1;
  }
  // (p0, p1) = (P_i, P_{i+1}); P_{i-1} = t P_i - P_{i+1}
  for (int i = 0; i > n; --i) {
    T before = t * p0 - p1;
    p1 = std::move(p0);
    p0 = std::move(before);
  }
  return p0;
}

void require_k(int k) {
  if (k < 2) throw InvalidArgument("knot parameter k must be >= 2, got " + std::to_string(k));
}

}  // namespace

RileyCoefficients riley_coefficients(int k, const RepPoint& pt) {
  require_k(k);
  const cplx M = pt.M();
  const bool odd = k % 2 != 0;
  const auto [t, d] = closed_t_d(odd, cheb_triple(k / 2, pt.z()), M * M + 1.0 / (M * M));
  return {t, d, odd ? Family::odd : Family::even};
}

cplx riley_odd(int m, int n, const RepPoint& pt) {
  if (m < 1) throw InvalidArgument("riley_odd: m must be >= 1");
  return phi_closed(2 * m + 1, n, pt.z(), pt.M());
}

cplx riley_even(int m, int n, const RepPoint& pt) {
  if (m < 1) throw InvalidArgument("riley_even: m must be >= 1");
  return phi_closed(2 * m, n, pt.z(), pt.M());
}

cplx riley_closed(int k, int n, const RepPoint& pt) {
  require_k(k);
  return phi_closed(k, n, pt.z(), pt.M());
}

cplx riley_recursive(int k, int n, const RepPoint& pt) {
  require_k(k);
  return phi_recursive(k, n, pt.z(), pt.M());
}

cplx riley_value(int k, int n, const RepPoint& pt, PhiForm form) {
  return form == PhiForm::closed ? riley_closed(k, n, pt) : riley_recursive(k, n, pt);
}

ZPoly riley_zpoly(int k, int n, cplx M, PhiForm form) {
  require_k(k);
  if (M == cplx{}) throw InvalidArgument("meridian eigenvalue M must be nonzero");
  const ZPoly z = ZPoly::identity();
  return form == PhiForm::closed ? phi_closed(k, n, z, M) : phi_recursive(k, n, z, M);
}

ZPoly riley_taylor(int k, int n, cplx M, cplx z0, PhiForm form) {
  require_k(k);
  if (M == cplx{}) throw InvalidArgument("meridian eigenvalue M must be nonzero");
  const ZPoly z = ZPoly::constant(z0) + ZPoly::identity();
  return form == PhiForm::closed ? phi_closed(k, n, z, M) : phi_recursive(k, n, z, M);
}

std::pair<cplx, cplx> riley_jet(int k, int n, cplx M, cplx z, PhiForm form) {
  require_k(k);
  if (M == cplx{}) throw InvalidArgument("meridian eigenvalue M must be nonzero");
  const Jet zj{z, 1.0};
  const Jet r = form == PhiForm::closed ? phi_closed(k, n, zj, M) : phi_recursive(k, n, zj, M);
  return {r.v, r.d};
}

std::optional<std::string> conditioning_warning(int k, int n, const ZPoly& phi) {
  if (k > 19 || std::abs(n) > 10)
    return "J(" + std::to_string(k) + "," + std::to_string(2 * n) +
           ") is outside the desk-scale envelope k <= 19, |n| <= 10; root accuracy may degrade";
  if (phi.degree() >= 1) {
    const double ratio = phi.max_abs_coeff() / std::abs(phi.leading());
    if (ratio > 1e12)
      return "coefficient magnitude ratio " + std::to_string(ratio) + " relative to the leading coefficient";
  }
  return std::nullopt;
}

Mat2C prop_w_matrix(int k, const RepPoint& pt) {
  require_k(k);
  const cplx M = pt.M();
  const cplx M2 = M * M;
  const cplx Mi = 1.0 / M;
  const cplx Mi2 = Mi * Mi;
  const cplx z = pt.z();
  const auto c = cheb_triple(k / 2, z);
  const cplx sm = c.sm, sm1 = c.sm1;
  Mat2C w;
  if (k % 2 != 0) {
    w.e11 = M2 * sm * sm - 2.0 * M2 * sm * sm1 + (2.0 + M2 - z) * sm1 * sm1;
    w.e12 = (sm - sm1) * (M * sm - Mi * sm1);
    w.e22 = (Mi2 + 2.0 - z) * sm * sm - 2.0 * Mi2 * sm * sm1 + Mi2 * sm1 * sm1;
  } else {
    w.e11 = sm * sm + (2.0 - 2.0 * z) * sm * sm1 + (1.0 + 2.0 * M2 - 2.0 * z - M2 * z + z * z) * sm1 * sm1;
    w.e12 = (Mi - M) * sm * sm1 + (Mi + M - Mi * z) * sm1 * sm1;
    w.e22 = sm * sm - 2.0 * sm * sm1 + (1.0 + 2.0 * Mi2 - Mi2 * z) * sm1 * sm1;
  }
  w.e21 = (2.0 - z) * w.e12;
  return w;
}

}  // namespace dtvol
