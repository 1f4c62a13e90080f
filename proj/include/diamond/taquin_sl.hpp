#pragma once

#include <vector>

#include "diamond/skew.hpp"

namespace diamond {

enum class Move { Right, Down, Exit };

// Turns the lowest vacated cell of column `col` into the star. Throws
// InputError unless that cell is an inner corner.
SlSkewTableau point_at(const SlSkewTableau& t, int col);

// One jeu de taquin move. Exit leaves the state untouched.
Move jdt_step(SlSkewTableau& t);
// Slides until the star reaches an outer corner; the star stays there.
// Every intermediate state, start and end included, is appended to `trace`.
SlSkewTableau jdt_full_slide(SlSkewTableau t, std::vector<SlSkewTableau>* trace = nullptr);
// Removes the star cell.
SlSkewTableau shed(SlSkewTableau t);

// Rotation by a half turn inside an h x w rectangle, t -> n+1-t.
SlSkewTableau sigma_sl(const SlSkewTableau& t, int h, int w);
SlSkewTableau sigma_sl(const SlSkewTableau& t);

// Reverse slide from a star at an outer corner back to an inner corner.
SlSkewTableau jdt_inverse(const SlSkewTableau& t);

struct SlReduction {
  SlTableau q;
  std::vector<int> rows;  // pushed row of each pass
};

// Pushes rows until the tableau is quasi-standard.
SlReduction reduce_sl(const SlTableau& t);
// One pass at row s.
SlTableau push_row_sl(const SlTableau& t, int s, std::vector<SlSkewTableau>* trace = nullptr);
// Inverse of reduce_sl onto shape lambda.
SlTableau expand_sl(const Shape& lambda, const SlTableau& q);

}  // namespace diamond
