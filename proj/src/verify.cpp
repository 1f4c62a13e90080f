#include "diamond/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "diamond/errors.hpp"
#include "diamond/taquin_sp.hpp"
#include "diamond/text_io.hpp"

namespace diamond {

namespace {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
  const std::size_t workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string one_line(const std::vector<LetterColumn>& cols) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j) os << " | ";
    for (std::size_t r = 0; r < cols[j].size(); ++r) os << (r ? "," : "") << to_string(cols[j][r]);
  }
  os << ']';
  return os.str();
}

struct Outcome {
  Shape mu;
  std::vector<LetterColumn> q;
  std::uint64_t passes = 0;
  std::uint64_t violations = 0;
  bool trapped = false;
  std::string failure;
};

void add_failure(BijectionReport& r, const VerifyOptions& opt, const std::string& what) {
  if (r.failures.size() < opt.max_failures) r.failures.push_back(what);
  else if (r.failures.size() == opt.max_failures) r.failures.push_back("...");
}

template <class Tab>
void finish(BijectionReport& r, const VerifyOptions& opt, const std::vector<Tab>& ss, const std::vector<Outcome>& out,
            const std::map<Shape, std::vector<Tab>>& qs) {
  std::set<std::vector<LetterColumn>> image;
  bool failed = false;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const Outcome& o = out[i];
    if (!o.failure.empty()) {
      failed = true;
      r.traps += o.trapped;
      add_failure(r, opt, o.failure);
      continue;
    }
    r.passes += o.passes;
    r.monotonicity_violations += o.violations;
    ++r.image_counts[o.mu];
    if (!image.insert(o.q).second) {
      failed = true;
      add_failure(r, opt, "two tableaux reduce to " + one_line(o.q));
    }
  }
  for (const auto& [mu, list] : qs) {
    r.qs_counts[mu] = list.size();
    r.qs_total += list.size();
    for (const auto& q : list) {
      std::vector<LetterColumn> cols;
      if constexpr (std::is_same_v<Tab, SpTableau>) cols = letter_columns(q);
      else cols = q.columns;
      if (!image.count(cols)) {
        failed = true;
        add_failure(r, opt, "quasi-standard tableau not reached: " + one_line(cols));
      }
    }
  }
  if (r.monotonicity_violations) add_failure(r, opt, "a row above the pushed row became pushable");
  if (BigInt(r.ss_count) != r.weyl) add_failure(r, opt, "tableau count differs from the Weyl dimension");
  if (r.ss_count != r.qs_total) add_failure(r, opt, "tableau count differs from the quasi-standard total");
  r.pass = !failed && r.failures.empty();
}

}  // namespace

BijectionReport verify_bijection(int n, const Shape& lambda, const VerifyOptions& opt) {
  validate_shape(lambda, n);
  BijectionReport r;
  r.kind = "sp";
  r.n = n;
  r.lambda = lambda;
  const auto ss = enum_ss_sp(n, lambda);
  r.ss_count = ss.size();
  r.weyl = weyl_dim_sp(n, lambda.multiplicities(n));
  std::vector<Outcome> out(ss.size());
  SlideOptions sopt;
  sopt.check_semistandard = opt.check_semistandard;
  parallel_for(ss.size(), opt.jobs, [&](std::size_t i) {
    const SpTableau& t = ss[i];
    Outcome& o = out[i];
    try {
      const PhiResult res = phi(t, sopt);
      o.mu = res.mu;
      o.q = letter_columns(res.q);
      o.passes = res.passes.size();
      if (!multiset_le(res.mu, lambda)) {
        o.failure = one_line(letter_columns(t)) + " reduces to shape " + to_string(res.mu);
        return;
      }
      for (const auto& p : res.passes) {
        const SlTableau before = dble_tableau(p.before);
        const SlTableau after = dble_tableau(p.after);
        const int h = p.before.columns.empty() ? 0 : p.before.columns[0].height();
        for (int s = p.row + 1; s <= h; ++s)
          if (!nqs_sl(before, s) && nqs_sl(after, s)) ++o.violations;
      }
      if (psi(lambda, res.q) != t) o.failure = "round trip fails on " + one_line(letter_columns(t));
    } catch (const TrapError& e) {
      o.trapped = true;
      o.failure = one_line(letter_columns(t)) + ": " + e.what();
    } catch (const std::exception& e) {
      o.failure = one_line(letter_columns(t)) + ": " + e.what();
    }
  });
  std::map<Shape, std::vector<SpTableau>> qs;
  for (const Shape& mu : multiset_subshapes(lambda)) qs[mu] = enum_qs_sp(n, mu);
  finish(r, opt, ss, out, qs);
  return r;
}

BijectionReport verify_bijection_sl(int n, const Shape& lambda, const VerifyOptions& opt) {
  validate_shape(lambda, n - 1);
  BijectionReport r;
  r.kind = "sl";
  r.n = n;
  r.lambda = lambda;
  const auto ss = enum_ss_sl(n, lambda);
  r.ss_count = ss.size();
  r.weyl = weyl_dim_sl(n, lambda.multiplicities(n - 1));
  std::vector<Outcome> out(ss.size());
  parallel_for(ss.size(), opt.jobs, [&](std::size_t i) {
    const SlTableau& t = ss[i];
    Outcome& o = out[i];
    try {
      const SlReduction res = reduce_sl(t);
      o.mu = res.q.shape();
      o.q = res.q.columns;
      o.passes = res.rows.size();
      if (!multiset_le(o.mu, lambda)) {
        o.failure = one_line(t.columns) + " reduces to shape " + to_string(o.mu);
        return;
      }
      if (expand_sl(lambda, res.q) != t) o.failure = "round trip fails on " + one_line(t.columns);
    } catch (const TrapError& e) {
      o.trapped = true;
      o.failure = one_line(t.columns) + ": " + e.what();
    } catch (const std::exception& e) {
      o.failure = one_line(t.columns) + ": " + e.what();
    }
  });
  std::map<Shape, std::vector<SlTableau>> qs;
  for (const Shape& mu : multiset_subshapes(lambda)) qs[mu] = enum_qs_sl(n, mu);
  finish(r, opt, ss, out, qs);
  return r;
}

std::vector<DimensionRow> verify_dims(int n, int cells) {
  std::vector<DimensionRow> rows;
  std::map<Shape, std::uint64_t> qs_count;
  for (const Shape& lambda : shapes_up_to(n, cells)) {
    DimensionRow row;
    row.lambda = lambda;
    std::uint64_t qs = 0;
    for_each_ss_sp(n, lambda, [&](const SpTableau& t) {
      ++row.ss_count;
      if (is_quasistandard_sp(t)) ++qs;
    });
    qs_count[lambda] = qs;
    row.weyl = weyl_dim_sp(n, lambda.multiplicities(n));
    rows.push_back(row);
  }
  for (auto& row : rows) {
    for (const Shape& mu : multiset_subshapes(row.lambda)) row.qs_total += qs_count.at(mu);
    row.pass = BigInt(row.ss_count) == row.weyl && row.ss_count == row.qs_total;
  }
  return rows;
}

}  // namespace diamond
