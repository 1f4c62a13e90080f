#pragma once

#include <vector>

#include "diamond/skew.hpp"
#include "diamond/taquin_sl.hpp"

namespace diamond {

SpSkewTableau point_at(const SpSkewTableau& t, int col);

struct SlideOptions {
  bool check_semistandard = false;  // doubled picture after every step
  std::vector<SpSkewTableau>* trace = nullptr;
};

// One symplectic move. Exit leaves the state untouched.
Move sjdt_step(SpSkewTableau& t);
// Slides until the star reaches an outer corner; the star stays there.
SpSkewTableau sjdt_full_slide(SpSkewTableau t, const SlideOptions& opt = {});
SpSkewTableau shed(SpSkewTableau t);

// Half turn inside an h x w rectangle with bars swapped.
SpSkewTableau sigma_sp(const SpSkewTableau& t, int h, int w);
SpSkewTableau sigma_sp(const SpSkewTableau& t);
SpSkewTableau sjdt_inverse(const SpSkewTableau& t);

// One pass at row s: a trivial column of height n with its top s cells
// vacated is put in front, the star slides along row s, the column is removed.
// Throws TrapError if the star leaves row s, a 0 appears, or the front column
// does not come back trivial.
SpTableau sjdt_s(const SpTableau& t, int s, const SlideOptions& opt = {});

struct PhiPass {
  int row;
  SpTableau before;
  SpTableau after;
};

struct PhiResult {
  Shape mu;
  SpTableau q;
  std::vector<PhiPass> passes;
};

PhiResult phi(const SpTableau& t, const SlideOptions& opt = {});
// Inverse of phi onto shape lambda.
SpTableau psi(const Shape& lambda, const SpTableau& q, std::vector<SpSkewTableau>* trace = nullptr);

}  // namespace diamond
