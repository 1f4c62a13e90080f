#pragma once

#include <string>

#include "diamond/skew.hpp"

namespace diamond {

// Rows top to bottom, each cell left-aligned in a 3-character field.
// Letters as "3" / "3'", stars as "*" (or "*k"), vacated cells as ".".
std::string render(const Grid& g);
Grid parse_grid(const std::string& text);

std::string render(const SlTableau& t);
std::string render(const SpTableau& t);
SlTableau parse_sl(const std::string& text, Alphabet alphabet);
SpTableau parse_sp(const std::string& text, int n);

}  // namespace diamond
