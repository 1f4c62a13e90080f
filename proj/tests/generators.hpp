#pragma once

// Exhaustive families of skew fillings for round-trip tests.

#include <functional>
#include <vector>

#include "diamond/skew.hpp"

namespace gen {

using diamond::Letter;
using diamond::Shape;

// Calls visit(inner, outer, columns) for every filling of outer/inner with
// letters from `alphabet` whose rows weakly and columns strictly increase.
inline void skew_fillings(const Shape& outer, const Shape& inner, const std::vector<Letter>& alphabet,
                          const std::function<void(const std::vector<std::vector<Letter>>&)>& visit) {
  const int w = outer.columns();
  auto in = [&](int j) { return j < inner.columns() ? inner.heights[j] : 0; };
  std::vector<std::vector<Letter>> cols(w);
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < w; ++j)
    for (int r = in(j); r < outer.heights[j]; ++r) cells.push_back({r, j});
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      visit(cols);
      return;
    }
    const auto [r, j] = cells[k];
    for (Letter x : alphabet) {
      if (r > in(j) && !(cols[j].back() < x)) continue;
      if (j > 0 && r >= in(j - 1)) {
        const Letter left = cols[j - 1][r - in(j - 1)];
        if (x < left) continue;
      }
      cols[j].push_back(x);
      self(self, k + 1);
      cols[j].pop_back();
    }
  };
  rec(rec, 0);
}

// Columns j of mu whose lowest cell is an inner corner.
inline std::vector<int> inner_corners(const Shape& mu) {
  std::vector<int> out;
  for (int j = 0; j < mu.columns(); ++j)
    if (j + 1 == mu.columns() || mu.heights[j + 1] < mu.heights[j]) out.push_back(j);
  return out;
}

}  // namespace gen
