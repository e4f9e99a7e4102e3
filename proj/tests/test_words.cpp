#include "doctest.h"
#include "dtvol/words.hpp"
#include "support.hpp"

using namespace dtvol;

namespace {

FreeWord W(std::string_view s) { return FreeWord::parse(s); }

FreeWord random_word(testing::Gen& g, int len) {
  std::vector<Letter> v;
  for (int i = 0; i < len; ++i) v.push_back({g.integer(0, 1) == 0 ? Gen::a : Gen::b, g.integer(0, 1) == 0 ? 1 : -1});
  return FreeWord(std::move(v));
}

}  // namespace

TEST_CASE("parse and render") {
  CHECK(W("aB Ab").ascii() == "aBAb");
  CHECK(W("aB Ab").unicode() == "ab⁻¹a⁻¹b");
  CHECK(W("abBA").empty());
  CHECK(W("  ").empty());
  CHECK(W("aaBbA").ascii() == "a");
  CHECK_THROWS_AS(W("abc"), InvalidArgument);
}

TEST_CASE("twobridge_word") {
  CHECK(twobridge_word({3, 1}) == W("ab"));
  CHECK(twobridge_word({5, 3}) == W("aBAb"));
  CHECK(twobridge_word({5, 1}) == W("abab"));
  CHECK_THROWS_AS(twobridge_word({4, 1}), InvalidArgument);
  CHECK_THROWS_AS(twobridge_word({5, 2}), InvalidArgument);
  CHECK_THROWS_AS(twobridge_word({9, 3}), InvalidArgument);
  CHECK_THROWS_AS(twobridge_word({5, 5}), InvalidArgument);
  CHECK_THROWS_AS(twobridge_word({5, 7}), InvalidArgument);
}

TEST_CASE("jk_word") {
  CHECK(jk_word(3) == W("bAbaBa"));
  CHECK(jk_word(2) == W("bABa"));
  CHECK(jk_word(4) == W("bAbABaBa"));
  CHECK_THROWS_AS(jk_word(1), InvalidArgument);
  for (int k = 2; k <= 12; ++k) CHECK(jk_word(k).length() == static_cast<std::size_t>(2 * k));
}

TEST_CASE("tilde") {
  CHECK(W("aB").tilde() == W("Ba"));
  CHECK(FreeWord().tilde().empty());
  CHECK(W("bABa").tilde() == W("AbaB"));
  CHECK(W("bABa").tilde() == W("bABa").inverse());
}

TEST_CASE("inverse, reversal, power") {
  CHECK(W("ab").inverse() == W("BA"));
  CHECK(W("bAba").reversed() == W("abAb"));
  CHECK(W("ab").power(-2) == W("BABA"));
  CHECK(W("ab").power(0).empty());
  CHECK(W("ab").power(3) == W("ababab"));
}

TEST_CASE("knot parameters") {
  CHECK(KnotParam::make(2, -1).name() == "J(2,-2)");
  CHECK(KnotParam::make(3, 2).family() == Family::odd);
  CHECK(KnotParam::make(4, 2).family() == Family::even);
  CHECK(KnotParam::make(7, 1).m() == 3);
  CHECK_THROWS_AS(KnotParam::make(1, 1), InvalidArgument);
  CHECK_THROWS_AS(KnotParam::make(3, 0), InvalidArgument);
}

TEST_CASE("property: the defining words are admissible") {
  for (int k = 2; k <= 12; ++k) CHECK(is_admissible(jk_word(k)));
  for (int p = 3; p <= 21; p += 2)
    for (int q = -p + 1; q < p; ++q) {
      if (q % 2 == 0 || std::gcd(p, q) != 1) continue;
      CHECK(is_admissible(twobridge_word({p, q})));
    }
  CHECK_FALSE(is_admissible(FreeWord()));
  CHECK_FALSE(is_admissible(W("aab")));
}

TEST_CASE("property: group laws on random words") {
  testing::Gen g(21);
  for (int s = 0; s < 300; ++s) {
    const FreeWord u = random_word(g, g.integer(0, 12));
    const FreeWord v = random_word(g, g.integer(0, 12));
    CHECK((u * u.inverse()).empty());
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(u.tilde().tilde() == u);
    CHECK((u * v).tilde() == u.tilde() * v.tilde());
    CHECK(u.reversed().reversed() == u);
    CHECK(FreeWord::parse(u.ascii()) == u);
    const int e = g.integer(-3, 3), f = g.integer(-3, 3);
    CHECK(u.power(e) * u.power(f) == u.power(e + f));
    // stored form is reduced
    for (std::size_t i = 1; i < u.length(); ++i) CHECK_FALSE(u.letters()[i] == u.letters()[i - 1].inverse());
  }
}
