#pragma once

#include <optional>
#include <string>

#include "dtvol/slrep.hpp"
#include "dtvol/words.hpp"
#include "dtvol/zpoly.hpp"

namespace dtvol {

/// Which construction of the Riley polynomial to use:
/// closed Chebyshev form S_n(t) - d S_{n-1}(t), or the two-term recurrence in n.
enum class PhiForm { closed, recursive };

/// t = tr rho(w) and the multiplier d of S_{n-1}(t).
struct RileyCoefficients {
  cplx t;
  cplx d;
  Family family;
};

RileyCoefficients riley_coefficients(int k, const RepPoint& pt);

/// Phi_{J(2m+1, 2n)}(M, z).
cplx riley_odd(int m, int n, const RepPoint& pt);
/// Phi_{J(2m, 2n)}(M, z).
cplx riley_even(int m, int n, const RepPoint& pt);
/// Closed form dispatched on the parity of k.
cplx riley_closed(int k, int n, const RepPoint& pt);

/// P_n = t P_{n-1} - P_{n-2} from P_0 = 1 and the family's P_1, run |n| steps
/// (downward for n < 0).
cplx riley_recursive(int k, int n, const RepPoint& pt);

cplx riley_value(int k, int n, const RepPoint& pt, PhiForm form);

/// Phi_{J(k,2n)}(M, .) as a coefficient polynomial in z, built with the same
/// recurrences over coefficient vectors.
ZPoly riley_zpoly(int k, int n, cplx M, PhiForm form = PhiForm::closed);

/// (Phi, dPhi/dz) at z straight from the recurrences. Much better conditioned
/// than the monomial coefficients for large degree.
std::pair<cplx, cplx> riley_jet(int k, int n, cplx M, cplx z, PhiForm form = PhiForm::closed);

/// Phi_{J(k,2n)}(M, z0 + u) as a polynomial in u: Taylor coefficients at z0,
/// free of the cancellation in the monomial coefficients far from 0.
ZPoly riley_taylor(int k, int n, cplx M, cplx z0, PhiForm form = PhiForm::closed);

/// Non-empty when (k, n) leaves the desk-scale envelope (k <= 19, |n| <= 10)
/// or the coefficient magnitudes are badly spread relative to the leading one.
std::optional<std::string> conditioning_warning(int k, int n, const ZPoly& phi);

/// rho(w) for w = jk_word(k) from the closed-form entries; w21 = (2 - z) w12.
Mat2C prop_w_matrix(int k, const RepPoint& pt);

}  // namespace dtvol
