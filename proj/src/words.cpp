#include "dtvol/words.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace dtvol {

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw InvalidArgument("FreeWord: letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<Letter> out;
  for (char c : text) {
    switch (c) {
      case 'a': out.push_back({Gen::a, 1}); break;
      case 'A': out.push_back({Gen::a, -1}); break;
      case 'b': out.push_back({Gen::b, 1}); break;
      case 'B': out.push_back({Gen::b, -1}); break;
      default:
        if (std::isspace(static_cast<unsigned char>(c))) break;
        throw InvalidArgument(std::string("FreeWord::parse: unexpected character '") + c + "'");
    }
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::reversed() const {
  return FreeWord(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

FreeWord FreeWord::power(int e) const {
  const FreeWord base = e < 0 ? inverse() : *this;
  std::vector<Letter> out;
  out.reserve(base.length() * static_cast<std::size_t>(std::abs(e)));
  for (int i = 0; i < std::abs(e); ++i) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return FreeWord(std::move(out));
}

FreeWord FreeWord::tilde() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back({l.gen == Gen::a ? Gen::b : Gen::a, -l.exp});
  return FreeWord(std::move(out));
}

std::string FreeWord::ascii() const {
  std::string s;
  for (const Letter& l : letters_) {
    const char c = l.gen == Gen::a ? 'a' : 'b';
    s.push_back(l.exp > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return s;
}

std::string FreeWord::unicode() const {
  std::string s;
  for (const Letter& l : letters_) {
    s += l.gen == Gen::a ? "a" : "b";
    if (l.exp < 0) s += "⁻¹";
  }
  return s;
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
  std::vector<Letter> out = u.letters_;
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return FreeWord(std::move(out));
}

void TwoBridgeParams::validate() const {
  if (p <= 0 || p % 2 == 0) throw InvalidArgument("two-bridge p must be an odd positive integer");
  if (q % 2 == 0) throw InvalidArgument("two-bridge q must be odd");
  if (!(p > std::abs(q) && std::abs(q) >= 1)) throw InvalidArgument("two-bridge parameters need p > |q| >= 1");
  if (std::gcd(p, q) != 1) throw InvalidArgument("two-bridge p and q must be coprime");
}

KnotParam KnotParam::make(int k, int n) {
  if (k < 2) throw InvalidArgument("knot parameter k must be >= 2, got " + std::to_string(k));
  if (n == 0) throw InvalidArgument("knot parameter n must be nonzero");
  return {k, n};
}

std::string KnotParam::name() const { return "J(" + std::to_string(k) + "," + std::to_string(2 * n) + ")"; }

FreeWord twobridge_word(const TwoBridgeParams& params) {
  params.validate();
  const auto [p, q] = params;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  for (int i = 1; i <= p - 1; ++i) {
    // floor division, q may be negative
    const long num = static_cast<long>(i) * q;
    long fl = num / p;
    if (num % p != 0 && num < 0) --fl;
    const int eps = (fl % 2 == 0) ? 1 : -1;
    out.push_back({i % 2 == 1 ? Gen::a : Gen::b, eps});
  }
  return FreeWord(std::move(out));
}

FreeWord jk_word(int k) {
  if (k < 2) throw InvalidArgument("jk_word: k must be >= 2, got " + std::to_string(k));
  const int m = k / 2;
  const FreeWord ba_inv = FreeWord::parse("bA");
  const FreeWord b_inv_a = FreeWord::parse("Ba");
  if (k % 2 != 0) return ba_inv.power(m) * FreeWord::parse("ba") * b_inv_a.power(m);
  return ba_inv.power(m) * b_inv_a.power(m);
}

bool is_admissible(const FreeWord& w) { return !w.empty() && w.tilde() == w.inverse(); }

}  // namespace dtvol
