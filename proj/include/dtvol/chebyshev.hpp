#pragma once

#include <utility>

#include "dtvol/errors.hpp"
#include "dtvol/zpoly.hpp"

namespace dtvol {

/// Values (S_j(omega), S_{j-1}(omega)) of the Chebyshev polynomials of the
/// second kind, S_j = omega S_{j-1} - S_{j-2}, S_0 = 1, S_1 = omega.
struct ChebPair {
  cplx s_j;
  cplx s_jm1;
  int j = 0;
  cplx omega;
};

namespace detail {

/// Runs the three-term recurrence from (S_0, S_{-1}) = (1, 0) to (S_j, S_{j-1}).
/// Negative j walks the inverted recurrence S_{i-2} = omega S_{i-1} - S_i.
/// Works over any ring-like T (complex scalars, coefficient polynomials).
template <class T>
std::pair<T, T> chebyshev_pair(int j, const T& omega, const T& one, const T& zero) {
  T cur = one;
  T prev = zero;
  if (j >= 0) {
    for (int i = 0; i < j; ++i) {
      T next = omega * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  } else {
    for (int i = 0; i > j; --i) {
      T before = omega * prev - cur;
      cur = std::move(prev);
      prev = std::move(before);
    }
  }
  return {std::move(cur), std::move(prev)};
}

}  // namespace detail

cplx eval_S(int j, cplx omega);
ChebPair eval_pair(int j, cplx omega);

/// Coefficients of S_j as a polynomial in its argument. Requires j >= -2.
ZPoly coeffs_S(int j);

/// S_j(t) and S_{j-1}(t) where t is itself a polynomial in z.
std::pair<ZPoly, ZPoly> compose_S(int j, const ZPoly& t);

}  // namespace dtvol
