#pragma once

#include <optional>
#include <vector>

#include "diamond/tableaux.hpp"

namespace diamond {

struct GridCell {
  enum class Kind { Vacated, Star, Filled };
  Kind kind = Kind::Vacated;
  Letter letter{};
  int label = 0;  // numbered stars; 0 is the active one

  static GridCell vacated() { return {}; }
  static GridCell star(int label = 0) { return {Kind::Star, Letter{}, label}; }
  static GridCell filled(Letter x) { return {Kind::Filled, x, 0}; }
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

// Column-major picture of a (possibly skew, possibly pointed) tableau.
struct Grid {
  std::vector<std::vector<GridCell>> columns;
  int height() const;
  friend bool operator==(const Grid&, const Grid&) = default;
};

// A column of a skew tableau: `inner` vacated cells on top, then the letters,
// with the star (if it sits in this column) taking one row among them.
struct SlSkewColumn {
  int inner = 0;
  std::vector<Letter> letters;
  friend bool operator==(const SlSkewColumn&, const SlSkewColumn&) = default;
};

struct SlSkewTableau {
  Alphabet alphabet;
  std::vector<SlSkewColumn> columns;
  std::optional<CellPos> star;

  int width() const { return static_cast<int>(columns.size()); }
  int height(int j) const;
  std::optional<Letter> at(int row, int col) const;
  friend bool operator==(const SlSkewTableau&, const SlSkewTableau&) = default;
};

struct SpSkewColumn {
  int inner = 0;
  SymplecticColumn filled;
  friend bool operator==(const SpSkewColumn&, const SpSkewColumn&) = default;
};

struct SpSkewTableau {
  int n = 1;
  std::vector<SpSkewColumn> columns;
  std::optional<CellPos> star;

  int width() const { return static_cast<int>(columns.size()); }
  int height(int j) const;
  bool zero_present() const;
  // Index of row `row` among the letters of column `col`, or -1.
  int letter_index(int row, int col) const;
  friend bool operator==(const SpSkewTableau&, const SpSkewTableau&) = default;
};

SlSkewTableau to_skew(const SlTableau& t);
SlTableau to_straight(const SlSkewTableau& t);
SpSkewTableau to_skew(const SpTableau& t);
SpTableau to_straight(const SpSkewTableau& t);

Grid to_grid(const SlTableau& t);
Grid to_grid(const SpTableau& t);
Grid to_grid(const SlSkewTableau& t);
Grid to_grid(const SpSkewTableau& t);
// Each symplectic column shown as its left and right copies.
Grid doubled_grid(const SpSkewTableau& t);

// Throw InputError unless the grid is a single-star skew picture of the right kind.
SlSkewTableau sl_skew_from_grid(const Grid& g, Alphabet alphabet);
SpSkewTableau sp_skew_from_grid(const Grid& g, int n);

// Neighbouring letters in the doubled picture are checked; stars and vacated
// cells are skipped.
bool doubled_is_semistandard(const SpSkewTableau& t);

}  // namespace diamond
