#include "doctest.h"
#include "dtvol/quadrature.hpp"
#include "support.hpp"

using namespace dtvol;

TEST_CASE("Gauss-Kronrod on smooth and endpoint-singular integrands") {
  const auto r1 = integrate_gauss_kronrod([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
  CHECK(r1.converged);
  CHECK(std::abs(r1.value - (std::exp(1.0) - 1.0)) < 1e-13);
  // square-root behaviour at the upper end, as at the Euclidean angle
  const auto r2 = integrate_gauss_kronrod([](double x) { return std::sqrt(1.0 - x); }, 0.0, 1.0, 1e-10);
  CHECK(r2.converged);
  CHECK(std::abs(r2.value - 2.0 / 3.0) < 1e-10);
  CHECK(r2.error <= 1e-10);
  const auto r3 = integrate_gauss_kronrod([](double x) { return x; }, 1.0, 1.0, 1e-10);
  CHECK(r3.value == 0.0);
}

TEST_CASE("tanh-sinh") {
  const auto r1 = integrate_tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12);
  CHECK(r1.converged);
  CHECK(std::abs(r1.value + 1.0) < 1e-11);
  const auto r2 = integrate_tanh_sinh([](double x) { return std::sqrt(1.0 - x); }, 0.0, 1.0, 1e-11);
  CHECK(std::abs(r2.value - 2.0 / 3.0) < 1e-11);
}

TEST_CASE("property: both rules agree on random polynomials times sqrt") {
  testing::Gen g(81);
  for (int s = 0; s < 20; ++s) {
    const double c0 = g.uniform(-1, 1), c1 = g.uniform(-1, 1), c2 = g.uniform(-1, 1);
    const double b = g.uniform(0.5, 3.0);
    auto f = [=](double x) { return (c0 + c1 * x + c2 * x * x) * std::sqrt(b - x); };
    const auto a = integrate_gauss_kronrod(f, 0.0, b, 1e-11);
    const auto t = integrate_tanh_sinh(f, 0.0, b, 1e-11);
    CHECK(std::abs(a.value - t.value) < 1e-9);
  }
}

TEST_CASE("Lobachevsky oracles agree") {
  // the test-side quadrature against known values
  CHECK(std::abs(testing::figure_eight_volume() - 2.029883212819307) < 1e-13);
  CHECK(std::abs(testing::lobachevsky(std::numbers::pi / 2.0)) < 1e-14);
}
