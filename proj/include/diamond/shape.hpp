#pragma once

#include <string>
#include <vector>

namespace diamond {

// Young diagram given by weakly decreasing column heights.
struct Shape {
  std::vector<int> heights;

  int columns() const { return static_cast<int>(heights.size()); }
  int cells() const;
  int row_length(int row) const;  // row is 0-based
  // a_k = number of columns of height k, for k = 1..hmax.
  std::vector<int> multiplicities(int hmax) const;
  static Shape from_multiplicities(const std::vector<int>& a);
  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

// Throws InputError unless heights are positive, weakly decreasing and <= hmax.
void validate_shape(const Shape& s, int hmax);

// Diagram containment mu ⊆ lambda.
bool shape_contains(const Shape& mu, const Shape& lambda);
// Column multiset inclusion: every height occurs in mu at most as often as in lambda.
bool multiset_le(const Shape& mu, const Shape& lambda);

std::vector<Shape> subshapes(const Shape& lambda);
std::vector<Shape> multiset_subshapes(const Shape& lambda);
// All shapes with columns of height <= hmax and at most `cells` boxes.
std::vector<Shape> shapes_up_to(int hmax, int cells);

struct CellPos {
  int row = 0;
  int col = 0;
  friend bool operator==(const CellPos&, const CellPos&) = default;
  friend auto operator<=>(const CellPos&, const CellPos&) = default;
};

// Cells of lambda outside mu, row by row, left to right.
std::vector<CellPos> skew_cells(const Shape& lambda, const Shape& mu);

std::string to_string(const Shape& s);
Shape parse_shape(const std::string& text);  // "3,2,2"

}  // namespace diamond
