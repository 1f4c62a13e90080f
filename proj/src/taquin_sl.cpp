#include "diamond/taquin_sl.hpp"

#include <algorithm>
#include <string>

#include "diamond/errors.hpp"
#include "frame.hpp"

namespace diamond {

namespace {

void require_classical(const SlSkewTableau& t) {
  if (t.alphabet.kind != AlphabetKind::Classical) throw InputError("expected the classical alphabet");
}

}  // namespace

SlSkewTableau point_at(const SlSkewTableau& t, int col) {
  if (t.star) throw InputError("tableau already has a star");
  if (col < 0 || col >= t.width() || t.columns[col].inner == 0) throw InputError("no vacated cell in that column");
  const int row = t.columns[col].inner - 1;
  if (col + 1 < t.width() && t.columns[col + 1].inner > row) throw InputError("star cell is not an inner corner");
  SlSkewTableau out = t;
  out.columns[col].inner -= 1;
  out.star = CellPos{row, col};
  return out;
}

Move jdt_step(SlSkewTableau& t) {
  if (!t.star) throw InputError("no star to slide");
  const auto [i, j] = *t.star;
  const bool has_right = j + 1 < t.width() && i < t.height(j + 1);
  const bool has_below = i + 1 < t.height(j);
  if (has_right && i < t.columns[j + 1].inner) throw TrapError("vacated cell right of the star");
  if (!has_right && !has_below) return Move::Exit;
  if (has_right && (!has_below || *t.at(i + 1, j) > *t.at(i, j + 1))) {
    auto& from = t.columns[j + 1].letters;
    const int k = i - t.columns[j + 1].inner;
    const Letter x = from[k];
    from.erase(from.begin() + k);
    auto& to = t.columns[j].letters;
    to.insert(to.begin() + (i - t.columns[j].inner), x);
    t.star = CellPos{i, j + 1};
    return Move::Right;
  }
  t.star = CellPos{i + 1, j};
  return Move::Down;
}

SlSkewTableau jdt_full_slide(SlSkewTableau t, std::vector<SlSkewTableau>* trace) {
  if (trace) trace->push_back(t);
  while (jdt_step(t) != Move::Exit)
    if (trace) trace->push_back(t);
  return t;
}

SlSkewTableau shed(SlSkewTableau t) {
  t.star.reset();
  return t;
}

SlSkewTableau sigma_sl(const SlSkewTableau& t, int h, int w) {
  require_classical(t);
  if (w < t.width()) throw InputError("rectangle narrower than the tableau");
  SlSkewTableau out{t.alphabet, std::vector<SlSkewColumn>(w), std::nullopt};
  for (int c = 0; c < w; ++c) {
    const int hc = c < t.width() ? t.height(c) : 0;
    if (hc > h) throw InputError("rectangle shorter than the tableau");
    auto& dst = out.columns[w - 1 - c];
    dst.inner = h - hc;
    if (c >= t.width()) continue;
    const auto& src = t.columns[c].letters;
    for (auto it = src.rbegin(); it != src.rend(); ++it)
      dst.letters.push_back(Letter::plain(sigma_letter_sl(it->magnitude(), t.alphabet.n)));
  }
  if (t.star) out.star = CellPos{h - 1 - t.star->row, w - 1 - t.star->col};
  return out;
}

SlSkewTableau sigma_sl(const SlSkewTableau& t) {
  int h = 0;
  for (int c = 0; c < t.width(); ++c) h = std::max(h, t.height(c));
  return sigma_sl(t, h, t.width());
}

SlSkewTableau jdt_inverse(const SlSkewTableau& t) {
  if (!t.star) throw InputError("no star to slide");
  const auto [i, j] = *t.star;
  if (i != t.height(j) - 1 || (j + 1 < t.width() && t.height(j + 1) > i))
    throw InputError("star is not at an outer corner");
  int h = 0;
  for (int c = 0; c < t.width(); ++c) h = std::max(h, t.height(c));
  const int w = t.width();
  return sigma_sl(jdt_full_slide(sigma_sl(t, h, w)), h, w);
}

SlTableau push_row_sl(const SlTableau& t, int s, std::vector<SlSkewTableau>* trace) {
  const int n = t.alphabet.n;
  if (t.alphabet.kind != AlphabetKind::Classical) throw InputError("expected the classical alphabet");
  if (!nqs_sl(t, s)) throw InputError("row " + std::to_string(s) + " cannot be pushed");
  SlSkewTableau cur = to_skew(t);
  SlSkewColumn trivial{s - 1, {}};
  for (int x = s + 1; x <= n - 1; ++x) trivial.letters.push_back(Letter::plain(x));
  cur.columns.insert(cur.columns.begin(), trivial);
  cur.star = CellPos{s - 1, 0};
  if (trace) trace->push_back(cur);
  Move m;
  while ((m = jdt_step(cur)) != Move::Exit) {
    if (m != Move::Right) throw TrapError("star left row " + std::to_string(s));
    if (trace) trace->push_back(cur);
  }
  cur = shed(cur);
  if (trace) trace->push_back(cur);
  const auto& first = cur.columns[0];
  if (first.inner != s - 1 || static_cast<int>(first.letters.size()) != n - s) throw TrapError("first column changed shape");
  for (int k = 0; k < n - s; ++k)
    if (first.letters[k] != Letter::plain(s + k)) throw TrapError("first column is not trivial");
  cur.columns.erase(cur.columns.begin());
  return to_straight(cur);
}

SlReduction reduce_sl(const SlTableau& t) {
  if (!is_semistandard_sl(t)) throw InputError("tableau is not semi-standard");
  for (const auto& c : t.columns)
    if (static_cast<int>(c.size()) > t.alphabet.n - 1) throw InputError("column taller than n-1");
  SlReduction out{t, {}};
  while (true) {
    int s = 0;
    const int h = out.q.columns.empty() ? 0 : static_cast<int>(out.q.columns[0].size());
    for (int r = h; r >= 1 && !s; --r)
      if (nqs_sl(out.q, r)) s = r;
    if (!s) return out;
    out.q = push_row_sl(out.q, s);
    out.rows.push_back(s);
  }
}

namespace {

struct SlOps {
  SlSkewTableau sigma(const SlSkewTableau& t, int h, int w) const { return sigma_sl(t, h, w); }
  SlSkewTableau point_at(const SlSkewTableau& t, int col) const { return diamond::point_at(t, col); }
  SlSkewTableau slide(const SlSkewTableau& t, std::vector<SlSkewTableau>* tr) const { return jdt_full_slide(t, tr); }
  SlSkewTableau shed(const SlSkewTableau& t) const { return diamond::shed(t); }
  bool trivial(const SlSkewColumn& c, int h) const {
    if (c.inner + static_cast<int>(c.letters.size()) != h) return false;
    for (std::size_t k = 0; k < c.letters.size(); ++k)
      if (c.letters[k] != Letter::plain(c.inner + 1 + static_cast<int>(k))) return false;
    return true;
  }
};

}  // namespace

SlTableau expand_sl(const Shape& lambda, const SlTableau& q) {
  const int n = q.alphabet.n;
  if (q.alphabet.kind != AlphabetKind::Classical) throw InputError("expected the classical alphabet");
  validate_shape(lambda, n - 1);
  const Shape mu = q.shape();
  if (!multiset_le(mu, lambda)) throw InputError("shape of Q is not below the target shape");
  const int d = lambda.columns() - mu.columns();
  SlSkewTableau padded{q.alphabet, {}, std::nullopt};
  SlSkewColumn trivial{0, {}};
  for (int x = 1; x <= n - 1; ++x) trivial.letters.push_back(Letter::plain(x));
  padded.columns.assign(d, trivial);
  for (const auto& c : q.columns) padded.columns.push_back({0, c});
  auto out = detail::expand_frame(padded, lambda, mu, d, n - 1, SlOps{},
                                  static_cast<std::vector<SlSkewTableau>*>(nullptr));
  SlTableau t = to_straight(out);
  if (t.shape() != lambda) throw TrapError("expansion landed on the wrong shape");
  return t;
}

}  // namespace diamond
