#include "diamond/enumeration.hpp"

#include <algorithm>
#include <string>

#include "diamond/errors.hpp"

namespace diamond {

std::vector<SymplecticColumn> enum_admissible_columns(int n, int k) {
  if (n < 1 || n > 20) throw InputError("rank out of range for enumeration");
  if (k < 0 || k > n) throw InputError("height out of range");
  std::vector<SymplecticColumn> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t a = 0; a <= full; ++a) {
    const int ka = std::popcount(a);
    if (ka > k) continue;
    for (std::uint64_t d = 0; d <= full; ++d) {
      if (ka + std::popcount(d) != k) continue;
      SymplecticColumn c{n, IndexSet::from_bits(a << 1), IndexSet::from_bits(d << 1), 1};
      if (is_admissible(c)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), column_less);
  return out;
}

namespace {

struct Candidate {
  SymplecticColumn column;
  std::vector<Letter> left, right;
};

}  // namespace

void for_each_ss_sp(int n, const Shape& lambda, const std::function<void(const SpTableau&)>& visit) {
  validate_shape(lambda, n);
  std::vector<std::vector<Candidate>> by_height(n + 1);
  for (int h : lambda.heights) {
    if (!by_height[h].empty()) continue;
    for (const auto& c : enum_admissible_columns(n, h)) {
      const DoubledColumn d = dble(c);
      by_height[h].push_back({c, d.left, d.right});
    }
  }
  SpTableau cur{n, {}};
  std::vector<const Candidate*> chosen;
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == lambda.heights.size()) {
      visit(cur);
      return;
    }
    const int h = lambda.heights[j];
    for (const Candidate& c : by_height[h]) {
      if (j > 0) {
        const auto& prev = chosen.back()->right;
        bool ok = true;
        for (int r = 0; r < h && ok; ++r) ok = !(c.left[r] < prev[r]);
        if (!ok) continue;
      }
      chosen.push_back(&c);
      cur.columns.push_back(c.column);
      self(self, j + 1);
      cur.columns.pop_back();
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<SpTableau> enum_ss_sp(int n, const Shape& lambda) {
  std::vector<SpTableau> out;
  for_each_ss_sp(n, lambda, [&](const SpTableau& t) { out.push_back(t); });
  return out;
}

std::vector<SpTableau> enum_qs_sp(int n, const Shape& lambda) {
  std::vector<SpTableau> out;
  for_each_ss_sp(n, lambda, [&](const SpTableau& t) {
    if (is_quasistandard_sp(t)) out.push_back(t);
  });
  return out;
}

std::uint64_t count_ss_sp(int n, const Shape& lambda) {
  std::uint64_t k = 0;
  for_each_ss_sp(n, lambda, [&](const SpTableau&) { ++k; });
  return k;
}

std::vector<SlTableau> enum_ss_sl(int n, const Shape& lambda) {
  validate_shape(lambda, n);
  std::vector<std::vector<LetterColumn>> by_height(n + 1);
  for (int h : lambda.heights) {
    if (!by_height[h].empty()) continue;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (std::popcount(m) != h) continue;
      LetterColumn c;
      for (int x : IndexSet::from_bits(m << 1).elements()) c.push_back(Letter::plain(x));
      by_height[h].push_back(c);
    }
    std::sort(by_height[h].begin(), by_height[h].end());
  }
  std::vector<SlTableau> out;
  SlTableau cur{{n, AlphabetKind::Classical}, {}};
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == lambda.heights.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& c : by_height[lambda.heights[j]]) {
      if (j > 0) {
        const auto& prev = cur.columns.back();
        bool ok = true;
        for (std::size_t r = 0; r < c.size() && ok; ++r) ok = !(c[r] < prev[r]);
        if (!ok) continue;
      }
      cur.columns.push_back(c);
      self(self, j + 1);
      cur.columns.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<SlTableau> enum_qs_sl(int n, const Shape& lambda) {
  auto all = enum_ss_sl(n, lambda);
  std::vector<SlTableau> out;
  for (auto& t : all)
    if (is_quasistandard_sl(t)) out.push_back(std::move(t));
  return out;
}

namespace {

std::vector<BigInt> partial_sums(int n, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) > n) throw InputError("too many multiplicities");
  std::vector<BigInt> lam(n + 1, 0);
  for (int i = n; i >= 1; --i) {
    const int ai = i - 1 < static_cast<int>(a.size()) ? a[i - 1] : 0;
    if (ai < 0) throw InputError("negative multiplicity");
    lam[i - 1] = lam[i] + ai;
  }
  lam.pop_back();
  return lam;
}

}  // namespace

BigInt weyl_dim_sp(int n, const std::vector<int>& a) {
  const auto lam = partial_sums(n, a);
  std::vector<BigInt> l(n), r(n);
  for (int i = 0; i < n; ++i) {
    r[i] = n - i;
    l[i] = lam[i] + r[i];
  }
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= l[i];
    den *= r[i];
    for (int j = i + 1; j < n; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
  }
  if (num % den != 0) throw TrapError("Weyl quotient is not an integer");
  return num / den;
}

BigInt weyl_dim_sl(int n, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) > n - 1) throw InputError("too many multiplicities");
  const auto lam = partial_sums(n, a);
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lam[i] - lam[j] + (j - i);
      den *= j - i;
    }
  return num / den;
}

}  // namespace diamond
