#include "diamond/taquin_sp.hpp"

#include <algorithm>
#include <string>

#include "diamond/errors.hpp"
#include "frame.hpp"

namespace diamond {

SpSkewTableau point_at(const SpSkewTableau& t, int col) {
  if (t.star) throw InputError("tableau already has a star");
  if (col < 0 || col >= t.width() || t.columns[col].inner == 0) throw InputError("no vacated cell in that column");
  const int row = t.columns[col].inner - 1;
  if (col + 1 < t.width() && t.columns[col + 1].inner > row) throw InputError("star cell is not an inner corner");
  SpSkewTableau out = t;
  out.columns[col].inner -= 1;
  out.star = CellPos{row, col};
  return out;
}

Move sjdt_step(SpSkewTableau& t) {
  if (!t.star) throw InputError("no star to slide");
  const auto [i, j] = *t.star;
  const bool has_right = j + 1 < t.width() && i < t.height(j + 1);
  const bool has_below = i + 1 < t.height(j);
  if (has_right && i < t.columns[j + 1].inner) throw TrapError("vacated cell right of the star");
  if (!has_right && !has_below) return Move::Exit;

  if (has_below) {
    bool down = !has_right;
    if (!down) {
      const Letter beta = dble(t.columns[j].filled).right[t.letter_index(i + 1, j)];
      const Letter alpha = dble(t.columns[j + 1].filled).left[t.letter_index(i, j + 1)];
      down = !(alpha < beta);
    }
    if (down) {
      t.star = CellPos{i + 1, j};
      return Move::Down;
    }
  }

  auto& here = t.columns[j].filled;
  auto& next = t.columns[j + 1].filled;
  const Letter alpha = dble(next).left[t.letter_index(i, j + 1)];
  const int u = alpha.magnitude();
  if (!alpha.is_barred()) {
    here = add_B(here, u);
    next = remove_A(next, u);
  } else {
    here = add_D(here, u);
    next = remove_C(next, u);
  }
  t.star = CellPos{i, j + 1};
  return Move::Right;
}

SpSkewTableau sjdt_full_slide(SpSkewTableau t, const SlideOptions& opt) {
  if (opt.trace) opt.trace->push_back(t);
  while (sjdt_step(t) != Move::Exit) {
    if (opt.check_semistandard && !doubled_is_semistandard(t)) throw TrapError("slide broke semi-standardness");
    if (opt.trace) opt.trace->push_back(t);
  }
  return t;
}

SpSkewTableau shed(SpSkewTableau t) {
  t.star.reset();
  return t;
}

SpSkewTableau sigma_sp(const SpSkewTableau& t, int h, int w) {
  if (w < t.width()) throw InputError("rectangle narrower than the tableau");
  SpSkewTableau out{t.n, std::vector<SpSkewColumn>(w), std::nullopt};
  for (int c = 0; c < w; ++c) {
    const int hc = c < t.width() ? t.height(c) : 0;
    if (hc > h) throw InputError("rectangle shorter than the tableau");
    auto& dst = out.columns[w - 1 - c];
    dst.inner = h - hc;
    dst.filled = SymplecticColumn{t.n, {}, {}, 1};
    if (c >= t.width()) continue;
    const auto& src = t.columns[c].filled;
    dst.filled.a = src.d;
    dst.filled.d = src.a;
  }
  if (t.star) out.star = CellPos{h - 1 - t.star->row, w - 1 - t.star->col};
  return out;
}

SpSkewTableau sigma_sp(const SpSkewTableau& t) {
  int h = 0;
  for (int c = 0; c < t.width(); ++c) h = std::max(h, t.height(c));
  return sigma_sp(t, h, t.width());
}

SpSkewTableau sjdt_inverse(const SpSkewTableau& t) {
  if (!t.star) throw InputError("no star to slide");
  const auto [i, j] = *t.star;
  if (i != t.height(j) - 1 || (j + 1 < t.width() && t.height(j + 1) > i))
    throw InputError("star is not at an outer corner");
  int h = 0;
  for (int c = 0; c < t.width(); ++c) h = std::max(h, t.height(c));
  const int w = t.width();
  return sigma_sp(sjdt_full_slide(sigma_sp(t, h, w)), h, w);
}

SpTableau sjdt_s(const SpTableau& t, int s, const SlideOptions& opt) {
  const int n = t.n;
  if (!nqs_sl(dble_tableau(t), s)) throw InputError("row " + std::to_string(s) + " cannot be pushed");
  SpSkewTableau cur = to_skew(t);
  SpSkewColumn trivial{s - 1, SymplecticColumn{n, IndexSet::range(s + 1, n), {}, 1}};
  cur.columns.insert(cur.columns.begin(), trivial);
  cur.star = CellPos{s - 1, 0};
  if (opt.trace) opt.trace->push_back(cur);
  Move m;
  while ((m = sjdt_step(cur)) != Move::Exit) {
    if (m != Move::Right) throw TrapError("star left row " + std::to_string(s));
    if (cur.zero_present()) throw TrapError("letter 0 appeared");
    if (opt.check_semistandard && !doubled_is_semistandard(cur)) throw TrapError("slide broke semi-standardness");
    if (opt.trace) opt.trace->push_back(cur);
  }
  cur = shed(cur);
  if (opt.trace) opt.trace->push_back(cur);
  const auto& first = cur.columns[0];
  if (first.inner != s - 1 || first.filled.a != IndexSet::range(s, n) || !first.filled.d.empty())
    throw TrapError("first column is not trivial after the pass");
  cur.columns.erase(cur.columns.begin());
  return to_straight(cur);
}

PhiResult phi(const SpTableau& t, const SlideOptions& opt) {
  if (!is_semistandard_sp(t)) throw InputError("tableau is not semi-standard");
  PhiResult out{{}, t, {}};
  while (auto s = max_pushable_row(out.q)) {
    SpTableau next = sjdt_s(out.q, *s, opt);
    out.passes.push_back({*s, out.q, next});
    out.q = std::move(next);
  }
  out.mu = out.q.shape();
  return out;
}

namespace {

struct SpOps {
  SpSkewTableau sigma(const SpSkewTableau& t, int h, int w) const { return sigma_sp(t, h, w); }
  SpSkewTableau point_at(const SpSkewTableau& t, int col) const { return diamond::point_at(t, col); }
  SpSkewTableau slide(const SpSkewTableau& t, std::vector<SpSkewTableau>* tr) const {
    SlideOptions opt;
    opt.trace = tr;
    return sjdt_full_slide(t, opt);
  }
  SpSkewTableau shed(const SpSkewTableau& t) const { return diamond::shed(t); }
  bool trivial(const SpSkewColumn& c, int h) const {
    return c.filled.d.empty() && c.filled.a == IndexSet::range(c.inner + 1, h);
  }
};

}  // namespace

SpTableau psi(const Shape& lambda, const SpTableau& q, std::vector<SpSkewTableau>* trace) {
  validate_sp(q);
  const int n = q.n;
  validate_shape(lambda, n);
  const Shape mu = q.shape();
  if (!multiset_le(mu, lambda)) throw InputError("shape of Q is not below the target shape");
  const int d = lambda.columns() - mu.columns();
  SpSkewTableau padded{n, {}, std::nullopt};
  padded.columns.assign(d, SpSkewColumn{0, SymplecticColumn{n, IndexSet::range(1, n), {}, 1}});
  for (const auto& c : q.columns) padded.columns.push_back({0, c});
  if (trace) trace->push_back(padded);
  auto out = detail::expand_frame(padded, lambda, mu, d, n, SpOps{}, trace);
  SpTableau t = to_straight(out);
  if (t.shape() != lambda) throw TrapError("expansion landed on the wrong shape");
  return t;
}

}  // namespace diamond
