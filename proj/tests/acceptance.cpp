// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "diamond/columns.hpp"
#include "diamond/enumeration.hpp"
#include "diamond/errors.hpp"
#include "diamond/json_io.hpp"
#include "diamond/plucker.hpp"
#include "diamond/taquin_sl.hpp"
#include "diamond/taquin_sp.hpp"
#include "diamond/text_io.hpp"
#include "diamond/verify.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

using namespace diamond;

namespace {

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) notes << what;
    ok = ok && cond;
  }
};

std::vector<Letter> word(std::initializer_list<int> xs) {
  std::vector<Letter> out;
  for (int x : xs) out.push_back(x < 0 ? Letter::barred(-x) : Letter::plain(x));
  return out;
}

std::string draw(const std::string& text) { return render(parse_grid(text)); }

SpTableau rows_sp(const std::string& text) { return parse_sp(text, 4); }

void doubling(Check& c) {
  const auto h = dble(make_column(4, {1, 2}, {1}));
  c.expect(h.left == word({1, 2, -3}) && h.right == word({2, 3, -1}), "sp(8) column");
  const auto big = make_column(9, {1, 2, 3, 7, 8}, {1, 2, 3, 8});
  const auto g = dble(big);
  c.expect(g.b == IndexSet{4, 5, 6, 7, 9} && g.c == IndexSet{4, 5, 6, 9}, "sp(18) column");
  c.expect(g.left == word({1, 2, 3, 7, 8, -9, -6, -5, -4}) && g.right == word({4, 5, 6, 7, 9, -8, -3, -2, -1}),
           "sp(18) column letters");
}

void quasi_split(Check& c) {
  const auto t = parse_sp("1 2\n2 2'\n2'", 3);
  const SlTableau flat{Alphabet{3, AlphabetKind::Symplectic}, letter_columns(t)};
  c.expect(is_quasistandard_sl(flat), "classical reading should be quasi-standard");
  c.expect(!is_quasistandard_sp(t), "symplectic reading should not be quasi-standard");
}

void slides(Check& c) {
  for (const auto& s : golden::kSlides) {
    std::vector<std::string> got;
    if (s.symplectic) {
      std::vector<SpSkewTableau> trace;
      SlideOptions opt;
      opt.trace = &trace;
      trace.push_back(shed(sjdt_full_slide(sp_skew_from_grid(parse_grid(s.panels[0]), s.n), opt)));
      for (const auto& t : trace) got.push_back(render(to_grid(t)));
      for (const auto& d : s.doubled) {
        const Grid mine = doubled_grid(trace.at(d.step));
        const Grid want = parse_grid(d.text);
        bool same = mine.columns.size() == want.columns.size();
        for (std::size_t j = d.first_col; same && j < want.columns.size(); ++j) same = mine.columns[j] == want.columns[j];
        c.expect(same, "doubled panel " + std::to_string(d.step));
      }
      if (s.panels[1].find('0') != std::string::npos) {
        for (std::size_t k = 1; k < trace.size(); ++k) {
          const Grid g = to_grid(trace[k]);
          for (std::size_t j = 1; j < g.columns.size(); ++j)
            for (const auto& cell : g.columns[j])
              c.expect(cell.kind != GridCell::Kind::Filled || cell.letter.magnitude() != 0, "0 outside column 1");
        }
      }
    } else {
      const Alphabet a{s.n, AlphabetKind::Classical};
      std::vector<SlSkewTableau> trace;
      trace.push_back(shed(jdt_full_slide(sl_skew_from_grid(parse_grid(s.panels[0]), a), &trace)));
      for (const auto& t : trace) got.push_back(render(to_grid(t)));
    }
    std::vector<std::string> want;
    for (const auto& p : s.panels) want.push_back(draw(p));
    c.expect(got == want, "slide panels differ");
  }
}

void example_four(Check& c) {
  const auto t = rows_sp(golden::kFour);
  c.expect(render(dble_tableau(t)) == draw(golden::kFourDoubled), "doubled tableau");
  c.expect(max_pushable_row(t) == 3, "max pushable row");
  const auto r = phi(t);
  std::vector<int> rows;
  for (const auto& p : r.passes) rows.push_back(p.row);
  c.expect(rows == golden::kFourRows, "pushed rows");
  for (std::size_t k = 0; k < r.passes.size() && k < golden::kFourPasses.size(); ++k)
    c.expect(r.passes[k].after == rows_sp(golden::kFourPasses[k]), "pass " + std::to_string(k + 1));
  c.expect(r.q == rows_sp("1\n3'\n2'\n1'") && r.mu.multiplicities(4) == std::vector<int>{0, 0, 0, 1}, "final column");
  std::vector<SpSkewTableau> trace;
  const auto back = psi(Shape::from_multiplicities({0, 1, 1, 1}), r.q, &trace);
  c.expect(back == t, "expansion");
  std::vector<std::string> settled;
  for (const auto& s : trace)
    if (!s.star) settled.push_back(render(to_grid(s)));
  std::vector<std::string> want;
  for (const auto& p : golden::kFourExpansion) want.push_back(draw(p));
  c.expect(settled == want, "expansion panels");
}

void dimensions(Check& c) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto p = verify_plucker(n, k);
      const BigInt adm = enum_admissible_columns(n, k).size();
      c.expect(p.pass && adm == p.kernel && adm == p.expected_kernel,
               "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

struct BijectionRuns {
  std::vector<BijectionReport> reports;
  double seconds = 0;
};

BijectionRuns& runs() {
  static BijectionRuns r = [] {
    BijectionRuns out;
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;
    opt.jobs = 1;
    opt.check_semistandard = true;
    for (int n = 2; n <= 3; ++n)
      for (const Shape& lambda : shapes_up_to(n, n == 2 ? 5 : 4)) out.reports.push_back(verify_bijection(n, lambda, opt));
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }();
  return r;
}

void bijection(Check& c) {
  std::uint64_t total = 0;
  for (const auto& r : runs().reports) {
    total += r.ss_count;
    const bool counts = BigInt(r.ss_count) == r.weyl && r.ss_count == r.qs_total;
    c.expect(r.pass && counts, "n=" + std::to_string(r.n) + " " + to_string(r.lambda) + " " +
                                   (r.failures.empty() ? std::string() : r.failures.front()));
  }
  c.notes << runs().reports.size() << " shapes, " << total << " tableaux";
}

void traps(Check& c) {
  std::uint64_t passes = 0;
  for (const auto& r : runs().reports) {
    passes += r.passes;
    c.expect(r.traps == 0, "trap at n=" + std::to_string(r.n) + " " + to_string(r.lambda));
  }
  c.notes << passes << " passes";
}

void monotonicity(Check& c) {
  std::uint64_t bad = 0;
  for (const auto& r : runs().reports) bad += r.monotonicity_violations;
  c.expect(bad == 0, std::to_string(bad) + " violations");
}

void classical(Check& c) {
  for (const Shape& lambda : shapes_up_to(2, 4)) {
    const auto r = verify_bijection_sl(3, lambda);
    c.expect(r.pass && r.ss_count == r.qs_total, to_string(lambda));
  }
}

void round_trips(Check& c) {
  std::uint64_t cols = 0;
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& col : oracle::all_columns(n, k)) {
        if (!is_admissible(col)) continue;
        const auto h = dble(col);
        c.expect(g_from(h.b, h.c, n) == col, "g_from");
        ++cols;
      }
  // half turns in a fixed rectangle over every state of the golden slides and the rank-2 passes
  std::vector<SpSkewTableau> states;
  for (const auto& s : golden::kSlides) {
    if (!s.symplectic) {
      const auto t = sl_skew_from_grid(parse_grid(s.panels[0]), Alphabet{s.n, AlphabetKind::Classical});
      int hmax = 0;
      for (int j = 0; j < t.width(); ++j) hmax = std::max(hmax, t.height(j));
      c.expect(sigma_sl(sigma_sl(t, hmax, t.width()), hmax, t.width()) == t, "classical half turn");
      continue;
    }
    for (const auto& p : s.panels) states.push_back(sp_skew_from_grid(parse_grid(p), s.n));
  }
  for (const Shape& lambda : shapes_up_to(2, 4))
    for (const auto& t : enum_ss_sp(2, lambda))
      for (int s : pushable_rows(t)) {
        SlideOptions opt;
        opt.trace = &states;
        sjdt_s(t, s, opt);
      }
  for (const auto& s : states) {
    int hmax = 0;
    for (int j = 0; j < s.width(); ++j) hmax = std::max(hmax, s.height(j));
    c.expect(sigma_sp(sigma_sp(s, hmax, s.width()), hmax, s.width()) == s, "symplectic half turn");
    c.expect(sp_skew_from_json(to_json(s)) == s && sp_skew_from_json(to_json(s, true)) == s, "skew json");
  }
  // text and json on the golden corpus
  std::vector<std::string> corpus;
  for (const auto& s : golden::kSlides) {
    corpus.insert(corpus.end(), s.panels.begin(), s.panels.end());
    for (const auto& d : s.doubled) corpus.push_back(d.text);
  }
  corpus.insert(corpus.end(), golden::kFourExpansion.begin(), golden::kFourExpansion.end());
  for (const auto& text : corpus) {
    const Grid g = parse_grid(text);
    c.expect(parse_grid(render(g)) == g, "grid text");
  }
  std::vector<std::string> tabs = golden::kFourPasses;
  tabs.push_back(golden::kFour);
  for (const auto& text : tabs) {
    const auto t = rows_sp(text);
    c.expect(parse_sp(render(t), 4) == t && sp_from_json(to_json(t)) == t, "tableau text/json");
  }
  c.notes << cols << " columns, " << states.size() << " slide states, " << corpus.size() + tabs.size() << " golden texts";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"golden doubling", doubling},
      {"quasi-standard split", quasi_split},
      {"golden slides", slides},
      {"golden bijection (rank 4 example)", example_four},
      {"admissible columns = contraction kernel", dimensions},
      {"counting and bijectivity", bijection},
      {"pass traps never fire", traps},
      {"higher rows stay non-pushable", monotonicity},
      {"classical baseline", classical},
      {"round trips", round_trips},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "exception: " << e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    failed += !c.ok;
    std::printf("%s  %2zu  %-42s %10.2f ms  %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms,
                c.notes.str().c_str());
  }
  std::printf("bijection runs took %.2f s single-threaded\n", runs().seconds);
  return failed ? 1 : 0;
}
