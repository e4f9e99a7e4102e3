#include "doctest.h"
#include "dtvol/riley.hpp"
#include "dtvol/slrep.hpp"
#include "support.hpp"

using namespace dtvol;
using testing::rel_diff;

TEST_CASE("odd family, m = 1") {
  testing::Gen g(41);
  for (int s = 0; s < 30; ++s) {
    const auto [M, z] = g.rep_point();
    const cplx M2 = M * M, Mi2 = 1.0 / M2;
    CHECK(rel_diff(riley_odd(1, 1, RepPoint(1.0, z)), z * z - 3.0 * z + 3.0) < 1e-13);
    CHECK(rel_diff(riley_odd(1, 1, RepPoint(M, z)), 1.0 + M2 + Mi2 - z + z * z - z * (M2 + Mi2)) < 1e-12);
    CHECK(riley_odd(1, 0, RepPoint(M, z)) == cplx{1.0});
  }
}

TEST_CASE("even family, m = 1") {
  testing::Gen g(42);
  for (int s = 0; s < 30; ++s) {
    const auto [M, z] = g.rep_point();
    const cplx M2 = M * M, Mi2 = 1.0 / M2;
    CHECK(rel_diff(riley_even(1, 1, RepPoint(1.0, z)), 3.0 - z) < 1e-13);
    CHECK(rel_diff(riley_even(1, -1, RepPoint(M, z)), 1.0 + (z - M2 - Mi2) * (z - 1.0)) < 1e-12);
    CHECK(rel_diff(riley_even(1, -1, RepPoint(1.0, z)), z * z - 3.0 * z + 3.0) < 1e-13);
  }
}

TEST_CASE("Riley coefficients t and d") {
  testing::Gen g(43);
  for (int s = 0; s < 30; ++s) {
    const auto [M, z] = g.rep_point();
    const RepPoint pt(M, z);
    const cplx q = z - M * M - 1.0 / (M * M);
    // m = 1: S_1 = z, S_0 = 1
    const RileyCoefficients odd = riley_coefficients(3, pt);
    CHECK(odd.family == Family::odd);
    CHECK(rel_diff(odd.t, M * M + 1.0 / (M * M) + 2.0 - z - (z - 2.0) * q * z) < 1e-12);
    CHECK(rel_diff(odd.d, 1.0 - q * z * (z - 1.0)) < 1e-12);
    const RileyCoefficients even = riley_coefficients(2, pt);
    CHECK(even.family == Family::even);
    CHECK(rel_diff(even.t, 2.0 + (z - 2.0) * q) < 1e-12);
    CHECK(rel_diff(even.d, 1.0 + q * (z - 1.0)) < 1e-12);
  }
}

TEST_CASE("recursive form") {
  testing::Gen g(44);
  const RepPoint p1({1.0, 0.5}, {2.0, -1.0});
  CHECK(rel_diff(riley_recursive(3, 2, p1), riley_odd(1, 2, p1)) < 1e-12);
  for (int s = 0; s < 20; ++s) {
    const auto [M, z] = g.rep_point();
    const RepPoint pt(M, z);
    CHECK(rel_diff(riley_recursive(4, -3, pt), riley_even(2, -3, pt)) < 1e-12);
    for (int k = 2; k <= 9; ++k) CHECK(riley_recursive(k, 0, pt) == cplx{1.0});
  }
}

TEST_CASE("riley_zpoly") {
  auto coeffs_equal = [](const ZPoly& p, std::vector<cplx> want) {
    REQUIRE(p.degree() == static_cast<int>(want.size()) - 1);
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(p[i] - want[i]) < 1e-14);
  };
  coeffs_equal(riley_zpoly(2, -1, 1.0), {3.0, -3.0, 1.0});
  coeffs_equal(riley_zpoly(2, 1, 1.0), {3.0, -1.0});
  CHECK(riley_zpoly(3, 1, {0.8, 0.45}).degree() == 2);
  CHECK_THROWS_AS(riley_zpoly(1, 1, 1.0), InvalidArgument);
  CHECK_THROWS_AS(riley_zpoly(3, 1, 0.0), InvalidArgument);
}

TEST_CASE("property: coefficient polynomial matches the recurrence") {
  testing::Gen g(45);
  for (int k = 2; k <= 9; ++k)
    for (int n : {-4, -1, 1, 3}) {
      const cplx M = g.annulus(0.7, 1.4);
      const ZPoly p = riley_zpoly(k, n, M);
      const ZPoly q = riley_zpoly(k, n, M, PhiForm::recursive);
      CHECK(p.degree() == q.degree());
      for (int s = 0; s < 300; ++s) {
        const cplx z = g.disc(2.5);
        const cplx want = riley_recursive(k, n, RepPoint(M, z));
        // rounding of the monomial sum scales with sum |c_i| |z|^i
        double scale = 0.0;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) scale += std::abs(p[i]) * std::pow(std::abs(z), i);
        CHECK(std::abs(p(z) - want) / std::max({1.0, std::abs(want), 1e-6 * scale}) < 1e-9);
      }
    }
}

TEST_CASE("property: closed form equals recursive form") {
  testing::Gen g(46);
  double worst = 0.0;
  for (int k = 2; k <= 9; ++k)
    for (int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      for (int s = 0; s < 100; ++s) {
        const RepPoint pt(g.annulus(0.6, 1.8), g.disc(3.0));
        worst = std::max(worst, rel_diff(riley_closed(k, n, pt), riley_recursive(k, n, pt)));
      }
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("property: closed form equals the Riley value of the relator word") {
  testing::Gen g(47);
  for (int k = 2; k <= 9; ++k)
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      const FreeWord W = jk_word(k).power(n);
      for (int s = 0; s < 10; ++s) {
        const RepPoint pt(g.annulus(0.7, 1.4), g.disc(2.5));
        const double scale = std::max(1.0, rho_word(W, pt).max_abs());
        CHECK(std::abs(riley_closed(k, n, pt) - riley_poly_value(W, pt)) / scale < 1e-9);
      }
    }
}

TEST_CASE("property: J(3,2) and J(2,-2) share the Riley polynomial") {
  testing::Gen g(48);
  for (int s = 0; s < 50; ++s) {
    const auto [M, z] = g.rep_point();
    const RepPoint pt(M, z);
    CHECK(rel_diff(riley_odd(1, 1, pt), riley_even(1, -1, pt)) < 1e-12);
  }
}

TEST_CASE("prop_w_matrix") {
  testing::Gen g(49);
  for (int s = 0; s < 30; ++s) {
    const auto [M, z] = g.rep_point();
    const RepPoint pt(M, z);
    const cplx Mi = 1.0 / M;
    CHECK(rel_diff(prop_w_matrix(3, pt).e12, (z - 1.0) * (M * z - Mi)) < 1e-12);
    CHECK(rel_diff(prop_w_matrix(2, pt).e22, z * z - 2.0 * z + 1.0 + 2.0 * Mi * Mi - Mi * Mi * z) < 1e-12);
  }
}

TEST_CASE("property: explicit w matrix equals the matrix product") {
  testing::Gen g(50);
  for (int k = 2; k <= 12; ++k)
    for (int s = 0; s < 30; ++s) {
      const auto [M, z] = g.rep_point();
      const RepPoint pt(M, z);
      const Mat2C a = prop_w_matrix(k, pt);
      const Mat2C b = rho_word(jk_word(k), pt);
      const double scale = std::max(1.0, b.max_abs());
      CHECK((a - b).max_abs() / scale < 1e-10);
      CHECK(std::abs(a.det() - 1.0) / (scale * scale) < 1e-12);
      CHECK(a.e21 == (2.0 - z) * a.e12);
      CHECK(rel_diff(a.trace(), riley_coefficients(k, pt).t) < 1e-12);
    }
}

TEST_CASE("riley_jet and riley_taylor") {
  testing::Gen g(51);
  for (int k : {2, 3, 6, 9})
    for (int n : {-3, 2}) {
      const cplx M = g.annulus(0.8, 1.2);
      const cplx z0 = g.disc(2.0);
      const auto [f, df] = riley_jet(k, n, M, z0);
      CHECK(rel_diff(f, riley_closed(k, n, RepPoint(M, z0))) < 1e-12);
      const double h = 1e-5;
      const cplx fd = (riley_closed(k, n, RepPoint(M, z0 + h)) - riley_closed(k, n, RepPoint(M, z0 - h))) / (2.0 * h);
      CHECK(rel_diff(df, fd) < 1e-6);
      const auto [fr, dfr] = riley_jet(k, n, M, z0, PhiForm::recursive);
      CHECK(rel_diff(fr, f) < 1e-11);
      CHECK(rel_diff(dfr, df) < 1e-11);
      const ZPoly t = riley_taylor(k, n, M, z0);
      CHECK(rel_diff(t[0], f) < 1e-12);
      CHECK(rel_diff(t[1], df) < 1e-11);
      for (int s = 0; s < 10; ++s) {
        const cplx u = g.disc(0.5);
        CHECK(rel_diff(t(u), riley_closed(k, n, RepPoint(M, z0 + u))) < 1e-10);
      }
    }
}

TEST_CASE("conditioning warning") {
  CHECK_FALSE(conditioning_warning(3, 2, riley_zpoly(3, 2, 1.0)).has_value());
  CHECK(conditioning_warning(21, 2, riley_zpoly(21, 2, 1.0)).has_value());
  CHECK(conditioning_warning(3, 11, riley_zpoly(3, 11, 1.0)).has_value());
}

TEST_CASE("property: degree is constant over generic M") {
  testing::Gen g(52);
  for (int k = 2; k <= 9; ++k)
    for (int n = -5; n <= 5; ++n) {
      if (n == 0) continue;
      const int d = riley_zpoly(k, n, g.annulus(0.7, 1.3)).degree();
      CHECK(d >= 1);
      CHECK(riley_zpoly(k, n, g.annulus(0.7, 1.3)).degree() == d);
    }
}
