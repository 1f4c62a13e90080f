#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/enumeration.hpp"
#include "diamond/errors.hpp"
#include "diamond/taquin_sp.hpp"
#include "diamond/text_io.hpp"
#include "diamond/verify.hpp"

using namespace diamond;

namespace {

SpSkewTableau pic(const std::string& text, int n = 4) { return sp_skew_from_grid(parse_grid(text), n); }
std::string draw(const std::string& text) { return render(parse_grid(text)); }

std::vector<std::string> pictures(const std::vector<SpSkewTableau>& trace) {
  std::vector<std::string> out;
  for (const auto& s : trace) out.push_back(render(to_grid(s)));
  return out;
}

// Column-major shorthand: "1 2 3 3'|1 3 3'|3 3'".
SpTableau cols(const std::string& text, int n = 4) {
  std::vector<LetterColumn> out(1);
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) out.back().push_back(parse_letter(tok));
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ' ') flush();
    else if (ch == '|') {
      flush();
      out.emplace_back();
    } else tok += ch;
  }
  flush();
  return sp_from_letters(n, out);
}

}  // namespace

TEST_CASE("symplectic slide along the third row") {
  SlideOptions opt;
  std::vector<SpSkewTableau> trace;
  opt.trace = &trace;
  opt.check_semistandard = true;
  const auto start = pic(". 1 2\n. 3 4\n* 3' 2'\n3' 1'\n2'\n1'");
  trace.push_back(shed(sjdt_full_slide(start, opt)));
  const std::vector<std::string> want = {
      draw(". 1 2\n. 3 4\n* 3' 2'\n3' 1'\n2'\n1'"),
      draw(". 1 2\n. 4 4\n4' * 2'\n3' 1'\n2'\n1'"),
      draw(". 1 3\n. 4 4\n4' 3' *\n3' 1'\n2'\n1'"),
      draw(". 1 3\n. 4 4\n4' 3'\n3' 1'\n2'\n1'"),
  };
  CHECK(pictures(trace) == want);
  CHECK(render(doubled_grid(trace[0])) == draw(". . 1 2 2 3\n. . 3 4 4 4\n* * 4' 3' 3' 2'\n3' 3' 2' 1'\n2' 2'\n1' 1'"));
  CHECK(render(doubled_grid(trace[1])) == draw(". . 1 2 2 3\n. . 4 4 4 4\n4' 4' * * 3' 2'\n3' 3' 2' 1'\n2' 2'\n1' 1'"));
}

TEST_CASE("symplectic slide that brings in 0") {
  std::vector<SpSkewTableau> trace;
  SlideOptions opt;
  opt.trace = &trace;
  const auto start = pic(". 1 3\n* 4 4\n4' 3'\n3' 1'\n2'\n1'");
  trace.push_back(shed(sjdt_full_slide(start, opt)));
  const std::vector<std::string> want = {
      draw(". 1 3\n* 4 4\n4' 3'\n3' 1'\n2'\n1'"),
      draw(". 1 3\n0 * 4\n3' 3'\n2' 1'\n1'\n0'"),
      draw(". 1 3\n0 4 *\n3' 3'\n2' 1'\n1'\n0'"),
      draw(". 1 3\n0 4\n3' 3'\n2' 1'\n1'\n0'"),
  };
  CHECK(pictures(trace) == want);
  CHECK(trace[1].zero_present());
  CHECK(render(doubled_grid(trace[0])) == draw(". . 1 2 3 3\n* * 4 4 4 4\n4' 4' 3' 3'\n3' 3' 2' 1'\n2' 2'\n1' 1'"));
  // the 0 column follows the doubling definition and is left out
  const Grid g = doubled_grid(trace[1]);
  const Grid shown = parse_grid(". . 1 2 3 3\n0 0 * * 4 4\n3' 3' 3' 3'\n2' 2' 2' 1'\n1' 1'\n0' 0'");
  for (int c = 2; c < 6; ++c) CHECK(g.columns[c] == shown.columns[c]);
}

TEST_CASE("a doubled column keeps its rows") {
  const auto t = cols("1 2 3 3'|1 3 3'|3 3'");
  CHECK(render(dble_tableau(t)) == draw("1 1 1 1 3 4\n2 2 3 4 4' 3'\n3 4 4' 3'\n4' 3'"));
  CHECK(pushable_rows(t) == std::vector<int>{2, 3});
  CHECK(max_pushable_row(t) == 3);
}

TEST_CASE("row reduction of a four-row tableau") {
  const auto t = cols("1 2 3 3'|1 3 3'|3 3'");
  const auto r = phi(t);
  std::vector<int> rows;
  std::vector<SpTableau> mids;
  for (const auto& p : r.passes) {
    rows.push_back(p.row);
    mids.push_back(p.after);
  }
  CHECK(rows == std::vector<int>{3, 2, 2, 1, 1});
  const std::vector<SpTableau> want = {
      cols("1 2 4' 3'|1 4|3 3'"), cols("1 2 3' 2'|1 4'|4"), cols("1 4' 3' 2'|1|4"),
      cols("1 4' 3' 2'|4"),       cols("1 3' 2' 1'"),
  };
  CHECK(mids == want);
  CHECK(r.mu == Shape{{4}});
  CHECK(is_quasistandard_sp(r.q));
  for (std::size_t k = 1; k < r.passes.size(); ++k) CHECK(r.passes[k].before == r.passes[k - 1].after);
}

TEST_CASE("expansion rebuilds the four-row tableau") {
  const auto t = cols("1 2 3 3'|1 3 3'|3 3'");
  std::vector<SpSkewTableau> trace;
  CHECK(psi(Shape{{4, 3, 2}}, cols("1 3' 2' 1'"), &trace) == t);
  std::vector<std::string> settled;
  for (const auto& s : trace)
    if (!s.star) settled.push_back(render(to_grid(s)));
  const std::vector<std::string> want = {
      draw("1 1 1\n2 2 3'\n3 3 2'\n4 4 1'"),
      draw(". . 1 4' 4'\n. . 2 3' 3'\n. . 3 2' 2'\n. . 1' 1' 1'"),
      draw(". . 2 4' 4'\n. . 3 3' 3'\n. . 4 2' 2'\n. 4' 1' 1'"),
      draw(". . 2 4' 4'\n. . 3 3' 3'\n. . 4 2' 2'\n4' 1' 1'"),
      draw(". . 2 4' 4'\n. . 3 3' 3'\n. 4 2' 2'\n4' 1' 1'"),
      draw(". . 3 4' 4'\n. . 4 3' 3'\n3 4' 2'\n3' 1' 1'"),
      draw(". . 3 4' 4'\n. 3 3' 3'\n3 3' 2'\n3' 1' 1'"),
      draw(". . 1 1 3\n. . 2 3 3'\n. 3 3 3'\n4 4 3'"),
  };
  CHECK(settled == want);
}

TEST_CASE("pushing a row that is not pushable") {
  const auto t = cols("1 2 3 3'|1 3 3'|3 3'");
  CHECK_THROWS_AS(sjdt_s(t, 1, {}), InputError);
  CHECK_THROWS_AS(sjdt_s(t, 4, {}), InputError);
  CHECK_NOTHROW(sjdt_s(t, 3, {}));
}

TEST_CASE("expansion rejects a shape that is too small") {
  CHECK_THROWS_AS(psi(Shape{{2}}, cols("1", 2)), InputError);
  CHECK_THROWS_AS(psi(Shape{{1}}, cols("1 2|1 2", 2)), InputError);
}

TEST_CASE("expanding a tableau that is not quasi-standard never comes back to it") {
  long tried = 0;
  for (const Shape& lambda : shapes_up_to(2, 4))
    for (const Shape& mu : multiset_subshapes(lambda))
      for (const auto& q : enum_ss_sp(2, mu)) {
        if (is_quasistandard_sp(q)) continue;
        ++tried;
        try {
          CHECK(phi(psi(lambda, q)).q != q);
        } catch (const TrapError&) {
        }
      }
  CHECK(tried > 10);
}

TEST_CASE("reverse symplectic slide undoes every forward slide") {
  long checked = 0;
  for (int n = 2; n <= 3; ++n)
    for (const Shape& lambda : shapes_up_to(n, n == 2 ? 5 : 4))
      for (const auto& t : enum_ss_sp(n, lambda)) {
        for (int s : pushable_rows(t)) {
          std::vector<SpSkewTableau> trace;
          SlideOptions opt;
          opt.trace = &trace;
          sjdt_s(t, s, opt);
          const auto& start = trace.front();
          const auto& end = trace[trace.size() - 2];
          REQUIRE(sjdt_inverse(end) == start);
          ++checked;
        }
      }
  CHECK(checked > 100);
}

TEST_CASE("half turn is an involution in a fixed rectangle") {
  const auto t = pic(". 1 2\n. 3 4\n* 3' 2'\n3' 1'\n2'\n1'");
  CHECK(sigma_sp(sigma_sp(t, 6, 3), 6, 3) == t);
  CHECK(sigma_sp(sigma_sp(t, 8, 3), 8, 3) == t);
}

TEST_CASE("symplectic bijection on small shapes") {
  VerifyOptions opt;
  opt.check_semistandard = true;
  for (int n = 2; n <= 3; ++n)
    for (const Shape& lambda : shapes_up_to(n, n == 2 ? 5 : 4)) {
      const auto r = verify_bijection(n, lambda, opt);
      INFO("n=" << n << " shape " << to_string(lambda));
      CHECK(r.pass);
      CHECK(r.monotonicity_violations == 0);
      CHECK(BigInt(r.ss_count) == r.weyl);
      CHECK(r.qs_total == r.ss_count);
    }
}
