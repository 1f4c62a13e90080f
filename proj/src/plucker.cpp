#include "diamond/plucker.hpp"

#include <algorithm>
#include <string>

#include "diamond/errors.hpp"

namespace diamond {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_nk(int n, int k) {
  if (n < 1 || n > 8) throw InputError("rank out of range for exterior powers");
  if (k < 0 || k > 2 * n) throw InputError("degree out of range");
}

}  // namespace

std::vector<Wedge> wedge_basis(int n, int k) {
  check_nk(n, k);
  std::vector<Wedge> out;
  Wedge cur;
  auto rec = [&](auto&& self, int next_code) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int c = next_code; c <= 2 * n; ++c) {
      cur.push_back(from_code(c, n));
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

FormalVector contract(const Wedge& w, int n) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (!in_symplectic_alphabet(w[p], n)) throw InputError("letter outside alphabet");
    if (p > 0 && !(w[p - 1] < w[p])) throw InputError("wedge letters must strictly increase");
  }
  FormalVector out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_barred()) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] != bar(w[i])) continue;
      Wedge rest;
      for (std::size_t p = 0; p < w.size(); ++p)
        if (p != i && p != j) rest.push_back(w[p]);
      // positions are 1-based in the sign
      const int sign = ((i + 1) + (j + 1) - 1) % 2 == 0 ? 1 : -1;
      out[rest] += sign;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

SparseMatrix contraction_matrix(int n, int k) {
  check_nk(n, k);
  const auto cols = wedge_basis(n, k);
  std::vector<Wedge> rows = k >= 2 ? wedge_basis(n, k - 2) : std::vector<Wedge>{};
  std::map<Wedge, int> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = static_cast<int>(r);
  SparseMatrix m;
  m.rows = static_cast<int>(rows.size());
  m.cols = static_cast<int>(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [w, v] : contract(cols[c], n)) m.entries.push_back({row_index.at(w), static_cast<int>(c), v});
  std::sort(m.entries.begin(), m.entries.end(),
            [](const auto& x, const auto& y) { return std::tie(x.row, x.col) < std::tie(y.row, y.col); });
  return m;
}

int matrix_rank(const SparseMatrix& m) {
  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols, 0));
  for (const auto& e : m.entries) a[e.row][e.col] = e.value;
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int cc = c + 1; cc < m.cols; ++cc) a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<FormalVector> internal_relations(int n, int k) {
  check_nk(n, k);
  std::vector<FormalVector> out;
  if (k < 2) return out;
  for (const Wedge& e : wedge_basis(n, k - 2)) {
    FormalVector rel;
    for (int l = 1; l <= n; ++l) {
      const Letter up = Letter::plain(l);
      const Letter down = Letter::barred(l);
      if (std::find(e.begin(), e.end(), up) != e.end() || std::find(e.begin(), e.end(), down) != e.end()) continue;
      Wedge w = e;
      w.insert(std::upper_bound(w.begin(), w.end(), up), up);
      w.insert(std::upper_bound(w.begin(), w.end(), down), down);
      const auto p = std::find(w.begin(), w.end(), up) - w.begin() + 1;
      const auto q = std::find(w.begin(), w.end(), down) - w.begin() + 1;
      rel[w] += (p + q - 1) % 2 == 0 ? 1 : -1;
    }
    if (!rel.empty()) out.push_back(rel);
  }
  return out;
}

PluckerReport verify_plucker(int n, int k) {
  check_nk(n, k);
  if (k > n) throw InputError("degree must not exceed n");
  PluckerReport r;
  r.n = n;
  r.k = k;
  const auto m = contraction_matrix(n, k);
  r.dimension = binomial(2 * n, k);
  r.contraction_rank = matrix_rank(m);
  r.kernel = r.dimension - r.contraction_rank;
  r.expected_kernel = binomial(2 * n, k) - binomial(2 * n, k - 2);

  // relations as rows over the degree k basis
  const auto rels = internal_relations(n, k);
  const auto cols = wedge_basis(n, k);
  std::map<Wedge, int> col_index;
  for (std::size_t c = 0; c < cols.size(); ++c) col_index[cols[c]] = static_cast<int>(c);
  SparseMatrix rm;
  rm.rows = static_cast<int>(rels.size());
  rm.cols = m.cols;
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (const auto& [w, v] : rels[i]) rm.entries.push_back({static_cast<int>(i), col_index.at(w), v});
  r.relation_rank = matrix_rank(rm);

  r.pass = r.kernel == r.expected_kernel && r.relation_rank == r.contraction_rank;
  return r;
}

}  // namespace diamond
