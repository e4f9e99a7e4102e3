#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dtvol/zpoly.hpp"

namespace dtvol {

/// All complex roots of p, with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration followed by Newton polishing. Throws InvalidArgument for the
/// zero polynomial and for constants.
std::vector<cplx> poly_roots(const ZPoly& p);

/// Same, warm-started from `guess` (used when guess.size() == degree).
std::vector<cplx> poly_roots(const ZPoly& p, std::span<const cplx> guess);

/// Value and derivative of a polynomial at a point.
using PolyEvaluator = std::function<std::pair<cplx, cplx>(cplx)>;

/// Same, but the iteration evaluates through `eval`, which must represent the
/// same polynomial as p (up to a constant factor). p only supplies the degree
/// and the cold-start guesses.
std::vector<cplx> poly_roots(const ZPoly& p, std::span<const cplx> guess, const PolyEvaluator& eval);

/// Newton iteration on a single root from `start`. Returns the polished root;
/// `converged` reports whether the last correction fell below the stopping
/// threshold.
cplx newton_polish(const ZPoly& p, cplx start, int max_iter = 50, bool* converged = nullptr);

/// Bound |p(root)| <= 1e-10 max|coeff| max(1, |root|)^deg used as acceptance test.
bool satisfies_backward_bound(const ZPoly& p, cplx root, double rel = 1e-10);

}  // namespace dtvol
