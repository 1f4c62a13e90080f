#include "diamond/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "diamond/errors.hpp"

namespace diamond {

int Shape::cells() const { return std::accumulate(heights.begin(), heights.end(), 0); }

int Shape::row_length(int row) const {
  return static_cast<int>(std::count_if(heights.begin(), heights.end(), [row](int h) { return h > row; }));
}

std::vector<int> Shape::multiplicities(int hmax) const {
  std::vector<int> a(hmax, 0);
  for (int h : heights) {
    if (h < 1 || h > hmax) throw InputError("column height " + std::to_string(h) + " out of range");
    ++a[h - 1];
  }
  return a;
}

Shape Shape::from_multiplicities(const std::vector<int>& a) {
  Shape s;
  for (int k = static_cast<int>(a.size()); k >= 1; --k) {
    if (a[k - 1] < 0) throw InputError("negative multiplicity");
    s.heights.insert(s.heights.end(), a[k - 1], k);
  }
  return s;
}

void validate_shape(const Shape& s, int hmax) {
  for (std::size_t j = 0; j < s.heights.size(); ++j) {
    const int h = s.heights[j];
    if (h < 1 || h > hmax) throw InputError("column height " + std::to_string(h) + " out of range");
    if (j > 0 && h > s.heights[j - 1]) throw InputError("column heights must weakly decrease");
  }
}

bool shape_contains(const Shape& mu, const Shape& lambda) {
  if (mu.columns() > lambda.columns()) return false;
  for (int j = 0; j < mu.columns(); ++j)
    if (mu.heights[j] > lambda.heights[j]) return false;
  return true;
}

bool multiset_le(const Shape& mu, const Shape& lambda) {
  int hmax = 1;
  for (int h : mu.heights) hmax = std::max(hmax, h);
  for (int h : lambda.heights) hmax = std::max(hmax, h);
  auto a = mu.multiplicities(hmax);
  auto b = lambda.multiplicities(hmax);
  for (int k = 0; k < hmax; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

namespace {

void grow(const Shape& lambda, std::size_t j, int cap, Shape& cur, std::vector<Shape>& out) {
  out.push_back(cur);
  if (j == lambda.heights.size()) return;
  for (int h = 1; h <= std::min(cap, lambda.heights[j]); ++h) {
    cur.heights.push_back(h);
    grow(lambda, j + 1, h, cur, out);
    cur.heights.pop_back();
  }
}

}  // namespace

std::vector<Shape> subshapes(const Shape& lambda) {
  std::vector<Shape> out;
  Shape cur;
  grow(lambda, 0, lambda.heights.empty() ? 0 : lambda.heights[0], cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Shape> multiset_subshapes(const Shape& lambda) {
  int hmax = 1;
  for (int h : lambda.heights) hmax = std::max(hmax, h);
  const auto a = lambda.multiplicities(hmax);
  std::vector<Shape> out;
  std::vector<int> b(hmax, 0);
  while (true) {
    out.push_back(Shape::from_multiplicities(b));
    int k = 0;
    while (k < hmax && b[k] == a[k]) b[k++] = 0;
    if (k == hmax) break;
    ++b[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Shape> shapes_up_to(int hmax, int cells) {
  std::vector<Shape> out;
  Shape cur;
  auto rec = [&](auto&& self, int cap, int left) -> void {
    out.push_back(cur);
    for (int h = 1; h <= std::min(cap, left); ++h) {
      cur.heights.push_back(h);
      self(self, h, left - h);
      cur.heights.pop_back();
    }
  };
  rec(rec, hmax, cells);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CellPos> skew_cells(const Shape& lambda, const Shape& mu) {
  std::vector<CellPos> out;
  const int rows = lambda.heights.empty() ? 0 : lambda.heights[0];
  for (int r = 0; r < rows; ++r)
    for (int j = 0; j < lambda.columns(); ++j) {
      const int inner = j < mu.columns() ? mu.heights[j] : 0;
      if (r < lambda.heights[j] && r >= inner) out.push_back({r, j});
    }
  return out;
}

std::string to_string(const Shape& s) {
  std::ostringstream os;
  for (std::size_t j = 0; j < s.heights.size(); ++j) os << (j ? "," : "") << s.heights[j];
  return os.str();
}

Shape parse_shape(const std::string& text) {
  Shape s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int h = std::stoi(item, &used);
      if (used != item.size()) throw InputError("bad shape entry: " + item);
      s.heights.push_back(h);
    } catch (const std::logic_error&) {
      throw InputError("bad shape entry: " + item);
    }
  }
  return s;
}

}  // namespace diamond
