#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dtvol/errors.hpp"

namespace dtvol {

enum class Gen : std::uint8_t { a, b };

struct Letter {
  Gen gen;
  int exp;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return {gen, -exp}; }
};

/// Element of the free group on a, b, always stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord a() { return FreeWord({{Gen::a, 1}}); }
  static FreeWord b() { return FreeWord({{Gen::b, 1}}); }

  /// Parses the ASCII form: 'a', 'b' for generators, 'A', 'B' for inverses.
  /// Whitespace is ignored; the result is reduced.
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  /// Letters in reversed order; exponents are kept.
  FreeWord reversed() const;
  FreeWord power(int e) const;
  /// a -> b^-1, b -> a^-1.
  FreeWord tilde() const;

  std::string ascii() const;
  std::string unicode() const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Two-bridge knot b(p, q): p > |q| >= 1, both odd, coprime.
struct TwoBridgeParams {
  int p;
  int q;

  void validate() const;
};

enum class Family { odd, even };

/// Double twist knot J(k, 2n) with k >= 2 and n != 0.
struct KnotParam {
  int k;
  int n;

  static KnotParam make(int k, int n);

  Family family() const { return k % 2 != 0 ? Family::odd : Family::even; }
  /// k = 2m + 1 (odd family) or k = 2m (even family).
  int m() const { return k / 2; }
  std::string name() const;

  friend bool operator==(const KnotParam&, const KnotParam&) = default;
};

/// w = a^e1 b^e2 ... a^e_{p-2} b^e_{p-1} with e_i = (-1)^floor(i q / p).
FreeWord twobridge_word(const TwoBridgeParams& params);

/// The word w with pi_1 of J(k, 2n) = <a, b | w^n a = b w^n>:
/// (b a^-1)^m b a (b^-1 a)^m for k = 2m + 1, (b a^-1)^m (b^-1 a)^m for k = 2m.
FreeWord jk_word(int k);

/// tilde(W) == W^-1 and W nonempty.
bool is_admissible(const FreeWord& w);

}  // namespace dtvol
