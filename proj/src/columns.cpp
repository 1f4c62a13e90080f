#include "diamond/columns.hpp"

#include <algorithm>
#include <string>

#include "diamond/errors.hpp"

namespace diamond {

namespace {

void check_indices(const SymplecticColumn& c) {
  if (c.n < 1 || c.n > kMaxRank) throw InputError("rank out of range: " + std::to_string(c.n));
  IndexSet allowed = IndexSet::range(c.lo, c.n);
  if (c.lo == 1) allowed.insert(0);
  if (!(c.a | c.d).subset_of(allowed))
    throw InputError("column indices outside [" + std::to_string(c.lo) + ", " + std::to_string(c.n) + "]");
}

std::vector<Letter> read_out(IndexSet up, IndexSet down) {
  std::vector<Letter> out;
  for (int x : up.elements()) out.push_back(Letter::plain(x));
  auto ds = down.elements();
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) out.push_back(Letter::barred(*it));
  return out;
}

}  // namespace

std::vector<Letter> SymplecticColumn::letters() const { return read_out(a, d); }

SymplecticColumn make_column(int n, IndexSet a, IndexSet d) {
  SymplecticColumn c{n, a, d, 1};
  check_indices(c);
  return c;
}

SymplecticColumn column_from_letters(int n, const std::vector<Letter>& letters) {
  SymplecticColumn c{n, {}, {}, 1};
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0 && !(letters[k - 1] < letters[k])) throw InputError("column entries must strictly increase");
    const Letter x = letters[k];
    if (x.magnitude() > n) throw InputError("letter " + to_string(x) + " outside alphabet");
    (x.is_barred() ? c.d : c.a).insert(x.magnitude());
  }
  return c;
}

bool column_less(const SymplecticColumn& x, const SymplecticColumn& y) {
  auto lx = x.letters();
  auto ly = y.letters();
  return std::lexicographical_compare(lx.begin(), lx.end(), ly.begin(), ly.end());
}

std::optional<IndexSet> admissibility_witness(const SymplecticColumn& c) {
  check_indices(c);
  const IndexSet i = c.a & c.d;
  IndexSet free = IndexSet::range(std::max(c.lo, 1), c.n) - (c.a | c.d);
  IndexSet j;
  int last = -1;
  for (int x : i.elements()) {
    int pick = -1;
    for (int y : free.elements()) {
      if (y > x && y > last) {
        pick = y;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    j.insert(pick);
    free.erase(pick);
    last = pick;
  }
  return j;
}

bool is_admissible(const SymplecticColumn& c) { return admissibility_witness(c).has_value(); }

DoubledColumn dble(const SymplecticColumn& col) {
  auto j = admissibility_witness(col);
  if (!j) throw InputError("column is not admissible");
  DoubledColumn out;
  out.i = col.a & col.d;
  out.j = *j;
  out.b = (col.a - out.i) | out.j;
  out.c = (col.d - out.i) | out.j;
  out.left = read_out(col.a, out.c);
  out.right = read_out(out.b, col.d);
  return out;
}

SymplecticColumn g_from(IndexSet b, IndexSet c, int n) {
  if (n < 1 || n > kMaxRank) throw InputError("rank out of range: " + std::to_string(n));
  if (!(b | c).subset_of(IndexSet::range(0, n))) throw InputError("index outside [0, n]");
  const IndexSet j = b & c;
  IndexSet free = IndexSet::range(0, n) - (b | c);
  IndexSet i;
  auto js = j.elements();
  int bound = n + 1;
  for (auto it = js.rbegin(); it != js.rend(); ++it) {
    const int limit = std::min(*it, bound);
    int pick = -1;
    for (int y : free.elements())
      if (y < limit) pick = y;
    if (pick < 0) throw BoundaryError("no index set below " + std::to_string(*it) + " inside [0, n]");
    i.insert(pick);
    free.erase(pick);
    bound = pick;
  }
  return SymplecticColumn{n, (b - j) | i, (c - j) | i, 1};
}

SplitColumn split_column(const SymplecticColumn& c, int alpha, SplitMode mode) {
  const int cut = mode == SplitMode::AtMost ? alpha : alpha - 1;
  if (cut < c.lo - 1 || cut > c.n) throw InputError("split point outside the column window");
  const DoubledColumn whole = dble(c);
  const IndexSet lower = IndexSet::range(0, cut);
  SplitColumn out;
  out.low = SymplecticColumn{std::max(cut, 1), c.a & lower, c.d & lower, c.lo};
  out.high = SymplecticColumn{c.n, c.a - lower, c.d - lower, cut + 1};
  if (cut < 1) out.low.n = 1;
  auto check = [&](const SymplecticColumn& part, IndexSet window) {
    if (!is_admissible(part)) throw InputError("split produces an inadmissible half");
    const DoubledColumn h = dble(part);
    if (h.b != (whole.b & window) || h.c != (whole.c & window))
      throw InputError("split point breaks the doubling");
  };
  check(out.low, lower);
  if (out.high.lo <= out.high.n) check(out.high, IndexSet::range(cut + 1, c.n));
  else if (out.high.height() != 0) throw InputError("split produces an inadmissible half");
  return out;
}

SymplecticColumn add_B(const SymplecticColumn& c, int u) {
  const DoubledColumn h = dble(c);
  if (h.b.contains(u)) throw TrapError("add_B: " + std::to_string(u) + " already in B");
  return g_from(h.b.with(u), h.c, c.n);
}

SymplecticColumn add_D(const SymplecticColumn& c, int v) {
  if (c.d.contains(v)) throw TrapError("add_D: " + std::to_string(v) + " already in D");
  SymplecticColumn out = c;
  out.d.insert(v);
  return out;
}

SymplecticColumn remove_A(const SymplecticColumn& c, int alpha) {
  if (!c.a.contains(alpha)) throw TrapError("remove_A: " + std::to_string(alpha) + " not in A");
  SymplecticColumn out = c;
  out.a.erase(alpha);
  return out;
}

SymplecticColumn remove_C(const SymplecticColumn& c, int alpha) {
  const DoubledColumn h = dble(c);
  if (!h.c.contains(alpha)) throw TrapError("remove_C: " + std::to_string(alpha) + " not in C");
  return g_from(h.b, h.c.without(alpha), c.n);
}

}  // namespace diamond
