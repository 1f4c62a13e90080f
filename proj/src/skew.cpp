#include "diamond/skew.hpp"

#include <algorithm>

#include "diamond/errors.hpp"

namespace diamond {

int Grid::height() const {
  std::size_t h = 0;
  for (const auto& c : columns) h = std::max(h, c.size());
  return static_cast<int>(h);
}

int SlSkewTableau::height(int j) const {
  const auto& c = columns.at(j);
  return c.inner + static_cast<int>(c.letters.size()) + (star && star->col == j ? 1 : 0);
}

std::optional<Letter> SlSkewTableau::at(int row, int col) const {
  if (col < 0 || col >= width()) return std::nullopt;
  const auto& c = columns[col];
  if (row < c.inner || row >= height(col)) return std::nullopt;
  int k = row - c.inner;
  if (star && star->col == col) {
    if (star->row == row) return std::nullopt;
    if (star->row < row) --k;
  }
  return c.letters[k];
}

int SpSkewTableau::height(int j) const {
  const auto& c = columns.at(j);
  return c.inner + c.filled.height() + (star && star->col == j ? 1 : 0);
}

bool SpSkewTableau::zero_present() const {
  return std::any_of(columns.begin(), columns.end(), [](const SpSkewColumn& c) { return c.filled.has_zero(); });
}

int SpSkewTableau::letter_index(int row, int col) const {
  if (col < 0 || col >= width()) return -1;
  const auto& c = columns[col];
  if (row < c.inner || row >= height(col)) return -1;
  int k = row - c.inner;
  if (star && star->col == col) {
    if (star->row == row) return -1;
    if (star->row < row) --k;
  }
  return k;
}

SlSkewTableau to_skew(const SlTableau& t) {
  SlSkewTableau s{t.alphabet, {}, std::nullopt};
  for (const auto& c : t.columns) s.columns.push_back({0, c});
  return s;
}

SlTableau to_straight(const SlSkewTableau& t) {
  if (t.star) throw InputError("pointed tableau is not straight");
  SlTableau out{t.alphabet, {}};
  for (const auto& c : t.columns) {
    if (c.inner != 0) throw InputError("skew tableau is not straight");
    if (!c.letters.empty()) out.columns.push_back(c.letters);
  }
  return out;
}

SpSkewTableau to_skew(const SpTableau& t) {
  SpSkewTableau s{t.n, {}, std::nullopt};
  for (const auto& c : t.columns) s.columns.push_back({0, c});
  return s;
}

SpTableau to_straight(const SpSkewTableau& t) {
  if (t.star) throw InputError("pointed tableau is not straight");
  SpTableau out{t.n, {}};
  for (const auto& c : t.columns) {
    if (c.inner != 0) throw InputError("skew tableau is not straight");
    if (c.filled.height() > 0) out.columns.push_back(c.filled);
  }
  return out;
}

namespace {

std::vector<GridCell> picture(int inner, const std::vector<Letter>& letters, std::optional<int> star_row) {
  std::vector<GridCell> col(inner, GridCell::vacated());
  std::size_t k = 0;
  const int h = inner + static_cast<int>(letters.size()) + (star_row ? 1 : 0);
  for (int r = inner; r < h; ++r) {
    if (star_row && *star_row == r) col.push_back(GridCell::star());
    else col.push_back(GridCell::filled(letters[k++]));
  }
  return col;
}

std::optional<int> star_row_in(const std::optional<CellPos>& star, int j) {
  if (star && star->col == j) return star->row;
  return std::nullopt;
}

struct ParsedColumn {
  int inner = 0;
  std::vector<Letter> letters;
};

ParsedColumn parse_column(const std::vector<GridCell>& cells, int j, std::optional<CellPos>& star) {
  ParsedColumn out;
  std::size_t r = 0;
  while (r < cells.size() && cells[r].kind == GridCell::Kind::Vacated) ++r;
  out.inner = static_cast<int>(r);
  for (; r < cells.size(); ++r) {
    const auto& cell = cells[r];
    if (cell.kind == GridCell::Kind::Vacated) throw InputError("vacated cell below a filled cell");
    if (cell.kind == GridCell::Kind::Star) {
      if (star) throw InputError("more than one star");
      star = CellPos{static_cast<int>(r), j};
    } else {
      out.letters.push_back(cell.letter);
    }
  }
  return out;
}

void check_outer_shape(const Grid& g) {
  for (std::size_t j = 1; j < g.columns.size(); ++j)
    if (g.columns[j].size() > g.columns[j - 1].size()) throw InputError("column heights must weakly decrease");
}

}  // namespace

Grid to_grid(const SlTableau& t) { return to_grid(to_skew(t)); }

Grid to_grid(const SpTableau& t) { return to_grid(to_skew(t)); }

Grid to_grid(const SlSkewTableau& t) {
  Grid g;
  for (int j = 0; j < t.width(); ++j)
    g.columns.push_back(picture(t.columns[j].inner, t.columns[j].letters, star_row_in(t.star, j)));
  return g;
}

Grid to_grid(const SpSkewTableau& t) {
  Grid g;
  for (int j = 0; j < t.width(); ++j)
    g.columns.push_back(picture(t.columns[j].inner, t.columns[j].filled.letters(), star_row_in(t.star, j)));
  return g;
}

Grid doubled_grid(const SpSkewTableau& t) {
  Grid g;
  for (int j = 0; j < t.width(); ++j) {
    const auto& c = t.columns[j];
    const DoubledColumn h = dble(c.filled);
    g.columns.push_back(picture(c.inner, h.left, star_row_in(t.star, j)));
    g.columns.push_back(picture(c.inner, h.right, star_row_in(t.star, j)));
  }
  return g;
}

SlSkewTableau sl_skew_from_grid(const Grid& g, Alphabet alphabet) {
  check_outer_shape(g);
  SlSkewTableau t{alphabet, {}, std::nullopt};
  for (std::size_t j = 0; j < g.columns.size(); ++j) {
    auto pc = parse_column(g.columns[j], static_cast<int>(j), t.star);
    for (Letter x : pc.letters)
      if (!alphabet.contains(x)) throw InputError("letter " + to_string(x) + " outside alphabet");
    t.columns.push_back({pc.inner, pc.letters});
  }
  return t;
}

SpSkewTableau sp_skew_from_grid(const Grid& g, int n) {
  check_outer_shape(g);
  SpSkewTableau t{n, {}, std::nullopt};
  for (std::size_t j = 0; j < g.columns.size(); ++j) {
    auto pc = parse_column(g.columns[j], static_cast<int>(j), t.star);
    t.columns.push_back({pc.inner, column_from_letters(n, pc.letters)});
  }
  return t;
}

bool doubled_is_semistandard(const SpSkewTableau& t) {
  const Grid g = doubled_grid(t);
  auto letter = [&](std::size_t j, std::size_t r) -> const GridCell* {
    if (j >= g.columns.size() || r >= g.columns[j].size()) return nullptr;
    const GridCell& c = g.columns[j][r];
    return c.kind == GridCell::Kind::Filled ? &c : nullptr;
  };
  for (std::size_t j = 0; j < g.columns.size(); ++j)
    for (std::size_t r = 0; r < g.columns[j].size(); ++r) {
      const GridCell* here = letter(j, r);
      if (!here) continue;
      if (const GridCell* below = letter(j, r + 1); below && !(here->letter < below->letter)) return false;
      if (const GridCell* right = letter(j + 1, r); right && right->letter < here->letter) return false;
    }
  return true;
}

}  // namespace diamond
