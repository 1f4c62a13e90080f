#include "diamond/tableaux.hpp"

#include <string>

#include "diamond/errors.hpp"

namespace diamond {

bool Alphabet::contains(Letter x) const {
  if (x.magnitude() < 1 || x.magnitude() > n) return false;
  return kind == AlphabetKind::Symplectic || !x.is_barred();
}

Shape SlTableau::shape() const {
  Shape s;
  for (const auto& c : columns) s.heights.push_back(static_cast<int>(c.size()));
  return s;
}

Shape SpTableau::shape() const {
  Shape s;
  for (const auto& c : columns) s.heights.push_back(c.height());
  return s;
}

namespace {

void check_sl_input(const SlTableau& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (t.columns[j].empty()) throw InputError("empty column");
    if (j > 0 && t.columns[j].size() > t.columns[j - 1].size())
      throw InputError("column heights must weakly decrease");
    for (Letter x : t.columns[j])
      if (!t.alphabet.contains(x)) throw InputError("letter " + to_string(x) + " outside alphabet");
  }
}

}  // namespace

bool is_semistandard_sl(const SlTableau& t) {
  check_sl_input(t);
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    const auto& c = t.columns[j];
    for (std::size_t r = 1; r < c.size(); ++r)
      if (!(c[r - 1] < c[r])) return false;
    if (j == 0) continue;
    const auto& p = t.columns[j - 1];
    for (std::size_t r = 0; r < c.size(); ++r)
      if (c[r] < p[r]) return false;
  }
  return true;
}

bool nqs_sl(const SlTableau& t, int s) {
  check_sl_input(t);
  if (s < 1 || t.columns.empty()) return false;
  const auto& first = t.columns[0];
  if (static_cast<int>(first.size()) < s) return false;
  for (int r = 0; r < s; ++r)
    if (first[r] != Letter::plain(r + 1)) return false;
  bool height_s = false;
  for (const auto& c : t.columns) height_s = height_s || static_cast<int>(c.size()) == s;
  if (!height_s) return false;
  // rows s and s+1 are indices s-1 and s
  for (std::size_t j = 0; j + 1 < t.columns.size(); ++j) {
    const auto& left = t.columns[j];
    const auto& right = t.columns[j + 1];
    if (static_cast<int>(left.size()) > s && static_cast<int>(right.size()) >= s)
      if (!(right[s - 1] < left[s])) return false;
  }
  return true;
}

bool is_quasistandard_sl(const SlTableau& t) {
  check_sl_input(t);
  const int h = t.columns.empty() ? 0 : static_cast<int>(t.columns[0].size());
  for (int s = 1; s <= h; ++s)
    if (nqs_sl(t, s)) return false;
  return true;
}

void validate_sp(const SpTableau& t) {
  if (t.n < 1 || t.n > kMaxRank) throw InputError("rank out of range: " + std::to_string(t.n));
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    const auto& c = t.columns[j];
    if (c.n != t.n || c.lo != 1) throw InputError("column rank mismatch");
    if (!(c.a | c.d).subset_of(IndexSet::range(1, t.n))) throw InputError("column index outside [1, n]");
    if (c.height() == 0) throw InputError("empty column");
    if (c.height() > t.n) throw InputError("column taller than n");
    if (j > 0 && c.height() > t.columns[j - 1].height()) throw InputError("column heights must weakly decrease");
  }
}

SlTableau dble_tableau(const SpTableau& t) {
  validate_sp(t);
  SlTableau out{{t.n, AlphabetKind::Symplectic}, {}};
  for (const auto& c : t.columns) {
    auto h = dble(c);
    out.columns.push_back(h.left);
    out.columns.push_back(h.right);
  }
  return out;
}

bool is_semistandard_sp(const SpTableau& t) {
  validate_sp(t);
  for (const auto& c : t.columns)
    if (!is_admissible(c)) return false;
  return is_semistandard_sl(dble_tableau(t));
}

std::vector<int> pushable_rows(const SpTableau& t) {
  const SlTableau d = dble_tableau(t);
  std::vector<int> out;
  const int h = t.columns.empty() ? 0 : t.columns[0].height();
  for (int s = 1; s <= h; ++s)
    if (nqs_sl(d, s)) out.push_back(s);
  return out;
}

std::optional<int> max_pushable_row(const SpTableau& t) {
  auto rows = pushable_rows(t);
  if (rows.empty()) return std::nullopt;
  return rows.back();
}

bool is_quasistandard_sp(const SpTableau& t) { return pushable_rows(t).empty(); }

SpTableau sp_from_letters(int n, const std::vector<LetterColumn>& columns) {
  SpTableau t{n, {}};
  for (const auto& c : columns) t.columns.push_back(column_from_letters(n, c));
  validate_sp(t);
  return t;
}

std::vector<LetterColumn> letter_columns(const SpTableau& t) {
  std::vector<LetterColumn> out;
  for (const auto& c : t.columns) out.push_back(c.letters());
  return out;
}

}  // namespace diamond
