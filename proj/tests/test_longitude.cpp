#include "doctest.h"
#include "dtvol/branch.hpp"
#include "dtvol/longitude.hpp"
#include "support.hpp"

using namespace dtvol;
using testing::rel_diff;

TEST_CASE("odd family, m = 1") {
  testing::Gen g(71);
  for (int n : {-3, -1, 1, 2}) {
    const KnotParam knot = KnotParam::make(3, n);
    for (int s = 0; s < 20; ++s) {
      const auto [M, z] = g.rep_point();
      const cplx Mi = 1.0 / M;
      const cplx want = -std::pow(M, -4 * n) * (Mi * z - M) / (M * z - Mi);
      CHECK(rel_diff(longitude_L(knot, z, M), want) < 1e-12);
    }
  }
}

TEST_CASE("unit modulus for real z on the unit circle") {
  testing::Gen g(72);
  for (int k = 2; k <= 9; ++k) {
    const KnotParam knot = KnotParam::make(k, g.integer(1, 4) * (g.integer(0, 1) == 0 ? 1 : -1));
    for (int s = 0; s < 20; ++s) {
      const double z = g.uniform(-3.0, 3.0);
      const cplx M = unit_meridian(g.uniform(0.01, 3.14));
      CHECK(std::abs(std::abs(longitude_L(knot, z, M)) - 1.0) < 1e-12);
      CHECK(imcond(knot, z) == 0.0);
    }
  }
}

TEST_CASE("property: closed formula equals the w12 route") {
  testing::Gen g(73);
  for (int k = 2; k <= 9; ++k)
    for (int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      const KnotParam knot = KnotParam::make(k, n);
      for (int s = 0; s < 10; ++s) {
        const auto [M, z] = g.rep_point();
        CHECK(rel_diff(longitude_L(knot, z, M), longitude_L_via_w12(knot, z, M)) < 1e-10);
      }
    }
}

TEST_CASE("property: branch condition sign matches |L| >= 1") {
  testing::Gen g(74);
  int checked = 0;
  for (int s = 0; s < 2000; ++s) {
    const KnotParam knot = KnotParam::make(g.integer(2, 9), g.integer(1, 5));
    const cplx z = g.disc(3.0);
    const cplx M = unit_meridian(g.uniform(0.05, 3.1));
    const double ic = imcond(knot, z);
    const double logL = std::log(std::abs(longitude_L(knot, z, M)));
    if (std::abs(ic) < 1e-8 || std::abs(logL) < 1e-8) continue;
    CHECK((ic < 0.0) == (logL > 0.0));
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("property: conjugation flips the branch condition") {
  testing::Gen g(75);
  for (int s = 0; s < 200; ++s) {
    const KnotParam knot = KnotParam::make(g.integer(2, 9), g.integer(1, 5));
    const cplx z = g.disc(3.0);
    const double a = imcond(knot, z), b = imcond(knot, std::conj(z));
    CHECK(std::abs(a + b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("degenerate denominator") {
  // k = 3: denominator M z - M^-1 vanishes at z = M^-2
  const cplx M = unit_meridian(1.0);
  CHECK_THROWS_AS(longitude_L(KnotParam::make(3, 1), 1.0 / (M * M), M), DegenerateLongitude);
}
