#include "diamond/alphabet.hpp"

#include <charconv>

#include "diamond/errors.hpp"

namespace diamond {

namespace {

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) throw InputError("rank out of range: " + std::to_string(n));
}

}  // namespace

int code(Letter x, int n) {
  check_rank(n);
  if (!in_extended_alphabet(x, n)) throw InputError("letter " + to_string(x) + " outside alphabet");
  return x.is_barred() ? 2 * n + 1 - x.magnitude() : x.magnitude();
}

Letter from_code(int c, int n) {
  check_rank(n);
  if (c < 0 || c > 2 * n + 1) throw InputError("code out of range: " + std::to_string(c));
  if (c <= n) return Letter::plain(c);
  return Letter::barred(2 * n + 1 - c);
}

int sigma_letter_sl(int t, int n) {
  if (n < 1 || t < 1 || t > n) throw InputError("letter " + std::to_string(t) + " outside [1, n]");
  return n + 1 - t;
}

bool in_symplectic_alphabet(Letter x, int n) { return x.magnitude() >= 1 && x.magnitude() <= n; }

bool in_extended_alphabet(Letter x, int n) { return x.magnitude() >= 0 && x.magnitude() <= n; }

std::string to_string(Letter x) {
  std::string s = std::to_string(x.magnitude());
  if (x.is_barred()) s += '\'';
  return s;
}

Letter parse_letter(std::string_view text) {
  bool barred = false;
  if (!text.empty() && text.back() == '\'') {
    barred = true;
    text.remove_suffix(1);
  }
  int m = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || m < 0 || m > kMaxRank)
    throw InputError("bad letter: '" + std::string(text) + "'");
  return {m, barred};
}

}  // namespace diamond
