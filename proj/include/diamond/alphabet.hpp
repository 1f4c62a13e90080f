#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace diamond {

// Largest magnitude a letter may carry. Index sets are 64-bit masks.
inline constexpr int kMaxRank = 60;

// A letter of the ordered alphabet 0 < 1 < ... < n < n' < ... < 1' < 0'.
// The order does not depend on n, so letters compare without context.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int magnitude, bool barred) : magnitude_(magnitude), barred_(barred) {}

  static constexpr Letter plain(int m) { return {m, false}; }
  static constexpr Letter barred(int m) { return {m, true}; }

  constexpr int magnitude() const { return magnitude_; }
  constexpr bool is_barred() const { return barred_; }
  constexpr bool is_zero() const { return magnitude_ == 0; }

  constexpr int key() const { return barred_ ? 2 * kMaxRank + 1 - magnitude_ : magnitude_; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) { return a.key() <=> b.key(); }

 private:
  int magnitude_ = 1;
  bool barred_ = false;
};

constexpr Letter bar(Letter x) { return {x.magnitude(), !x.is_barred()}; }

// Integer code for rank n: i -> i, i' -> 2n+1-i. Covers 0 and 0' as 0 and 2n+1.
int code(Letter x, int n);
Letter from_code(int c, int n);

// Classical alphabet involution t -> n+1-t.
int sigma_letter_sl(int t, int n);

bool in_symplectic_alphabet(Letter x, int n);
bool in_extended_alphabet(Letter x, int n);

// Text form: "3" and "3'".
std::string to_string(Letter x);
Letter parse_letter(std::string_view text);

}  // namespace diamond
