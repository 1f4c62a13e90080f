#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/enumeration.hpp"
#include "diamond/errors.hpp"
#include "diamond/taquin_sl.hpp"
#include "diamond/text_io.hpp"
#include "diamond/verify.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace diamond;

namespace {

const Alphabet kSeven{7, AlphabetKind::Classical};

SlSkewTableau pic(const std::string& text, Alphabet a = kSeven) { return sl_skew_from_grid(parse_grid(text), a); }

std::vector<std::string> pictures(const std::vector<SlSkewTableau>& trace) {
  std::vector<std::string> out;
  for (const auto& s : trace) out.push_back(render(to_grid(s)));
  return out;
}

}  // namespace

TEST_CASE("slide to the right twice") {
  std::vector<SlSkewTableau> trace;
  auto end = jdt_full_slide(pic(". 2 4\n* 3 5\n4 6\n5 7"), &trace);
  trace.push_back(shed(end));
  const std::vector<std::string> want = {
      render(to_grid(pic(". 2 4\n* 3 5\n4 6\n5 7"))),
      render(to_grid(pic(". 2 4\n3 * 5\n4 6\n5 7"))),
      render(to_grid(pic(". 2 4\n3 5 *\n4 6\n5 7"))),
      render(to_grid(pic(". 2 4\n3 5\n4 6\n5 7"))),
  };
  CHECK(pictures(trace) == want);
}

TEST_CASE("slide right then down") {
  std::vector<SlSkewTableau> trace;
  auto end = jdt_full_slide(pic(". 2 4\n* 3 6\n4 5\n5 7"), &trace);
  trace.push_back(shed(end));
  const std::vector<std::string> want = {
      render(to_grid(pic(". 2 4\n* 3 6\n4 5\n5 7"))),
      render(to_grid(pic(". 2 4\n3 * 6\n4 5\n5 7"))),
      render(to_grid(pic(". 2 4\n3 5 6\n4 *\n5 7"))),
      render(to_grid(pic(". 2 4\n3 5 6\n4 7\n5 *"))),
      render(to_grid(pic(". 2 4\n3 5 6\n4 7\n5"))),
  };
  CHECK(pictures(trace) == want);
}

TEST_CASE("ties move the star down") {
  auto t = pic("* 3\n3");
  CHECK(jdt_step(t) == Move::Down);
  CHECK(*t.star == CellPos{1, 0});
}

TEST_CASE("rotation and the reverse slide") {
  const auto out = pic(". 2 4\n3 5 6\n4 7\n5 *");
  const auto rot = sigma_sl(out);
  CHECK(render(to_grid(rot)) == render(to_grid(pic(". * 3\n. 1 4\n2 3 5\n4 6"))));
  CHECK(sigma_sl(rot) == out);
  const auto slid = jdt_full_slide(rot);
  CHECK(render(to_grid(slid)) == render(to_grid(pic(". 1 3\n. 3 4\n2 5 *\n4 6"))));
  CHECK(jdt_inverse(out) == pic(". 2 4\n* 3 6\n4 5\n5 7"));
}

TEST_CASE("reverse slide needs an outer corner") {
  CHECK_THROWS_AS(jdt_inverse(pic(". 2 4\n* 3 6\n4 5\n5 7")), InputError);
  CHECK_THROWS_AS(sigma_sl(pic("1 2", Alphabet{3, AlphabetKind::Symplectic})), InputError);
}

TEST_CASE("reverse slide undoes every forward slide") {
  const Alphabet four{4, AlphabetKind::Classical};
  std::vector<Letter> letters;
  for (int x = 1; x <= 4; ++x) letters.push_back(Letter::plain(x));
  long checked = 0;
  for (const Shape& outer : shapes_up_to(4, 8))
    for (const Shape& inner : subshapes(outer)) {
      if (inner.cells() == 0 || outer.cells() - inner.cells() > 6) continue;
      gen::skew_fillings(outer, inner, letters, [&](const std::vector<std::vector<Letter>>& cols) {
        SlSkewTableau t{four, {}, std::nullopt};
        for (int j = 0; j < outer.columns(); ++j)
          t.columns.push_back({j < inner.columns() ? inner.heights[j] : 0, cols[j]});
        for (int j : gen::inner_corners(inner)) {
          const auto start = point_at(t, j);
          const auto end = jdt_full_slide(start);
          REQUIRE(jdt_inverse(end) == start);
          int h = 0;
          for (int c = 0; c < start.width(); ++c) h = std::max(h, start.height(c));
          REQUIRE(sigma_sl(sigma_sl(start, h, start.width()), h, start.width()) == start);
          ++checked;
        }
      });
    }
  CHECK(checked > 10000);
}

TEST_CASE("classical counts match brute force and the hook formula") {
  for (int n = 2; n <= 4; ++n)
    for (const Shape& lambda : shapes_up_to(n - 1, 4)) {
      std::vector<Letter> letters;
      for (int x = 1; x <= n; ++x) letters.push_back(Letter::plain(x));
      long brute = 0;
      gen::skew_fillings(lambda, Shape{}, letters, [&](const auto& cols) { brute += oracle::semistandard_cells(cols); });
      CHECK(static_cast<long>(enum_ss_sl(n, lambda).size()) == brute);
      CHECK(weyl_dim_sl(n, lambda.multiplicities(n - 1)) == brute);
    }
}

TEST_CASE("pushing a row of a small tableau") {
  const Alphabet three{3, AlphabetKind::Classical};
  const auto t = parse_sl("1 2\n2", three);
  CHECK(nqs_sl(t, 1) == false);
  // columns (1,2 | 1): column 1 starts with 1, a height-1 column exists, and 1 < 2
  const auto u = parse_sl("1 1\n2", three);
  CHECK(nqs_sl(u, 1));
  CHECK(push_row_sl(u, 1) == parse_sl("1\n2", three));
  CHECK(push_row_sl(parse_sl("1\n2", three), 2) == parse_sl("1", three));
  const auto r = reduce_sl(u);
  CHECK(r.rows == std::vector<int>{2, 1, 1});
  CHECK(r.q.columns.empty());
  CHECK(expand_sl(Shape{{2, 1}}, r.q) == u);
  CHECK_THROWS_AS(push_row_sl(t, 1), InputError);
}

TEST_CASE("classical bijection round trips") {
  for (int n = 2; n <= 5; ++n)
    for (const Shape& lambda : shapes_up_to(n - 1, n <= 4 ? 5 : 4)) {
      const auto r = verify_bijection_sl(n, lambda);
      INFO("n=" << n << " shape " << to_string(lambda));
      CHECK(r.pass);
    }
}
