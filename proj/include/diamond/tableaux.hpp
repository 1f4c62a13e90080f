#pragma once

#include <optional>
#include <vector>

#include "diamond/columns.hpp"
#include "diamond/shape.hpp"

namespace diamond {

enum class AlphabetKind { Classical, Symplectic };

// Classical: 1 < ... < n. Symplectic: 1 < ... < n < n' < ... < 1'.
struct Alphabet {
  int n = 1;
  AlphabetKind kind = AlphabetKind::Classical;

  bool contains(Letter x) const;
  int size() const { return kind == AlphabetKind::Classical ? n : 2 * n; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

using LetterColumn = std::vector<Letter>;

struct SlTableau {
  Alphabet alphabet;
  std::vector<LetterColumn> columns;

  Shape shape() const;
  friend bool operator==(const SlTableau&, const SlTableau&) = default;
};

struct SpTableau {
  int n = 1;
  std::vector<SymplecticColumn> columns;

  Shape shape() const;
  friend bool operator==(const SpTableau&, const SpTableau&) = default;
};

// Throws InputError on ragged shapes or letters outside the alphabet.
bool is_semistandard_sl(const SlTableau& t);
// Row s (1-based) can be pushed: column 1 starts 1..s, some column has height
// exactly s, and t[s][j+1] < t[s+1][j] wherever both exist.
bool nqs_sl(const SlTableau& t, int s);
bool is_quasistandard_sl(const SlTableau& t);

SlTableau dble_tableau(const SpTableau& t);

// Throws InputError on ragged shapes, heights above n, or out-of-range indices.
void validate_sp(const SpTableau& t);
bool is_semistandard_sp(const SpTableau& t);
std::vector<int> pushable_rows(const SpTableau& t);
std::optional<int> max_pushable_row(const SpTableau& t);
bool is_quasistandard_sp(const SpTableau& t);

SpTableau sp_from_letters(int n, const std::vector<LetterColumn>& columns);
std::vector<LetterColumn> letter_columns(const SpTableau& t);

}  // namespace diamond
