#pragma once

#include <optional>
#include <vector>

#include "diamond/alphabet.hpp"
#include "diamond/index_set.hpp"

namespace diamond {

// Column with unbarred magnitudes `a` and barred magnitudes `d`, read top to
// bottom as a ascending then d descending. Indices live in [lo, n]; the
// extended letter 0 is also allowed when lo == 1.
struct SymplecticColumn {
  int n = 1;
  IndexSet a;
  IndexSet d;
  int lo = 1;

  int height() const { return a.size() + d.size(); }
  std::vector<Letter> letters() const;
  bool has_zero() const { return a.contains(0) || d.contains(0); }
  friend bool operator==(const SymplecticColumn&, const SymplecticColumn&) = default;
};

// f(A, D).
SymplecticColumn make_column(int n, IndexSet a, IndexSet d);
// From a strictly increasing top-to-bottom letter list.
SymplecticColumn column_from_letters(int n, const std::vector<Letter>& letters);

// Letter-sequence order, used for deterministic enumeration.
bool column_less(const SymplecticColumn& x, const SymplecticColumn& y);

// Greedy J for I = A∩D: smallest admissible choice, or nullopt.
std::optional<IndexSet> admissibility_witness(const SymplecticColumn& c);
bool is_admissible(const SymplecticColumn& c);

struct DoubledColumn {
  IndexSet i, j, b, c;
  std::vector<Letter> left;   // A then C'
  std::vector<Letter> right;  // B then D'
};

DoubledColumn dble(const SymplecticColumn& col);

// Inverse of doubling from (B, C). Searches I inside [0, n]; throws
// BoundaryError when no such I exists.
SymplecticColumn g_from(IndexSet b, IndexSet c, int n);

enum class SplitMode { AtMost, Below };

struct SplitColumn {
  SymplecticColumn low;
  SymplecticColumn high;
};

// AtMost cuts into letters <= alpha and > alpha, Below into < alpha and >= alpha.
// Throws InputError unless both halves are admissible and doubling commutes
// with the cut.
SplitColumn split_column(const SymplecticColumn& c, int alpha, SplitMode mode = SplitMode::AtMost);

// Column surgery used by the symplectic slide.
SymplecticColumn add_B(const SymplecticColumn& c, int u);
SymplecticColumn add_D(const SymplecticColumn& c, int v);
SymplecticColumn remove_A(const SymplecticColumn& c, int alpha);
SymplecticColumn remove_C(const SymplecticColumn& c, int alpha);

}  // namespace diamond
