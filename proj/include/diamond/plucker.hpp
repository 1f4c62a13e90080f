#pragma once

#include <map>
#include <vector>

#include "diamond/enumeration.hpp"

namespace diamond {

// Basis vector e_{x1} ^ ... ^ e_{xk}, letters strictly increasing.
using Wedge = std::vector<Letter>;
using FormalVector = std::map<Wedge, BigInt>;

std::vector<Wedge> wedge_basis(int n, int k);

// Contraction by the symplectic form: pairs (l, l') at positions i < j
// contribute (-1)^(i+j-1) times the wedge with both removed.
FormalVector contract(const Wedge& w, int n);

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  struct Entry {
    int row;
    int col;
    BigInt value;
  };
  std::vector<Entry> entries;
};

// Rows indexed by wedge_basis(n, k-2), columns by wedge_basis(n, k).
SparseMatrix contraction_matrix(int n, int k);
// Exact rank by fraction-free elimination.
int matrix_rank(const SparseMatrix& m);

// One relation per degree k-2 basis vector: the matching row of the contraction.
std::vector<FormalVector> internal_relations(int n, int k);

struct PluckerReport {
  int n = 0;
  int k = 0;
  BigInt dimension;        // C(2n, k)
  int contraction_rank = 0;
  BigInt kernel;           // dimension - rank
  BigInt expected_kernel;  // C(2n, k) - C(2n, k-2)
  int relation_rank = 0;
  bool pass = false;
};

PluckerReport verify_plucker(int n, int k);

}  // namespace diamond
