#pragma once

// Shared driver for the inverse of the row-pushing reduction: pad with
// trivial columns, rotate, slide the marked cells out, rotate back, strip.

#include <algorithm>
#include <string>
#include <vector>

#include "diamond/errors.hpp"
#include "diamond/shape.hpp"

namespace diamond::detail {

// Marked cells of lambda/mu shifted right by d, numbered bottom row first and
// right to left inside a row. Index k of the result is star number k+1.
inline std::vector<CellPos> numbered_stars(const Shape& lambda, const Shape& mu, int d) {
  auto cells = skew_cells(lambda, mu);
  for (auto& c : cells) c.col += d;
  std::sort(cells.begin(), cells.end(), [](CellPos x, CellPos y) {
    if (x.row != y.row) return x.row > y.row;
    return x.col > y.col;
  });
  return cells;
}

// Skew must provide columns[j].inner, width(), star. Ops provides sigma, point_at,
// slide (to the exit), shed, and trivial(column, h) telling whether the column
// holds exactly the letters inner+1..h.
template <class Skew, class Ops, class Trace>
Skew expand_frame(const Skew& padded, const Shape& lambda, const Shape& mu, int d, int h, const Ops& ops,
                  Trace* trace) {
  const int w = d + lambda.columns();
  const auto stars = numbered_stars(lambda, mu, d);
  Skew cur = ops.sigma(padded, h, w);
  if (trace) trace->push_back(cur);
  for (auto it = stars.rbegin(); it != stars.rend(); ++it) {
    const CellPos at{h - 1 - it->row, w - 1 - it->col};
    if (at.col >= cur.width() || cur.columns[at.col].inner != at.row + 1)
      throw TrapError("marked cell is not the lowest vacated cell of its column");
    cur = ops.point_at(cur, at.col);
    cur = ops.slide(cur, trace);
    cur = ops.shed(cur);
    if (trace) trace->push_back(cur);
  }
  Skew out = ops.sigma(cur, h, w);
  if (trace) trace->push_back(out);
  for (int j = 0; j < d; ++j)
    if (!ops.trivial(out.columns[j], h)) throw TrapError("padding column " + std::to_string(j + 1) + " is not trivial");
  out.columns.erase(out.columns.begin(), out.columns.begin() + d);
  return out;
}

}  // namespace diamond::detail
