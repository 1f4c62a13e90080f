#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/errors.hpp"
#include "diamond/tableaux.hpp"
#include "diamond/text_io.hpp"
#include "oracles.hpp"

using namespace diamond;

namespace {

std::string draw(const std::string& text) { return render(parse_grid(text)); }

}  // namespace

TEST_CASE("doubling a tableau of rank three") {
  const auto t = parse_sp("1 2\n2 2'\n2'", 3);
  CHECK(is_semistandard_sp(t));
  CHECK(render(dble_tableau(t)) == draw("1 1 2 3\n2 3 3' 2'\n3' 2'"));
  CHECK(pushable_rows(t) == std::vector<int>{2});
  CHECK_FALSE(is_quasistandard_sp(t));
  CHECK(nqs_sl(dble_tableau(t), 2));
  // the same letters read as a classical tableau over 1 < 2 < 3 < 3' < 2' < 1'
  const SlTableau flat{Alphabet{3, AlphabetKind::Symplectic}, letter_columns(t)};
  CHECK(is_semistandard_sl(flat));
  CHECK(is_quasistandard_sl(flat));
}

TEST_CASE("shape and validation") {
  const auto t = parse_sp("1 1 3\n2 3 3'\n3 3'\n3'", 4);
  CHECK(t.shape() == Shape{{4, 3, 2}});
  CHECK_THROWS_AS(parse_sp("1 2\n3", 1), InputError);
  CHECK_THROWS_AS(validate_sp(SpTableau{2, {make_column(2, {1}, {}), make_column(2, {1, 2}, {})}}), InputError);
  CHECK_THROWS_AS(validate_sp(SpTableau{1, {make_column(1, {1}, {1})}}), InputError);
  CHECK_THROWS_AS(parse_sl("1\n4", Alphabet{3, AlphabetKind::Classical}), InputError);
}

TEST_CASE("semi-standard needs the doubled rows to weakly increase") {
  CHECK(is_semistandard_sp(parse_sp("1 1", 2)));
  CHECK(is_semistandard_sp(parse_sp("1 1'", 2)));
  CHECK_FALSE(is_semistandard_sp(parse_sp("2 1", 2)));
  // 1 1' doubles to 1 2' | 2 1'
  CHECK(is_semistandard_sp(parse_sp("1 2\n1'", 2)));
  CHECK_FALSE(is_semistandard_sp(parse_sp("1 1\n1'", 2)));
  CHECK_FALSE(is_semistandard_sp(parse_sp("2\n2'", 2)));
}

TEST_CASE("classical predicates against the cell oracle") {
  const Alphabet three{3, AlphabetKind::Classical};
  const auto t = parse_sl("1 1 2\n2 3", three);
  CHECK(is_semistandard_sl(t));
  CHECK(oracle::semistandard_cells(t.columns));
  CHECK_FALSE(is_semistandard_sl(parse_sl("1 1\n1", three)));
  CHECK(nqs_sl(parse_sl("1 1\n2", three), 1));
  CHECK_FALSE(nqs_sl(parse_sl("1 2\n2", three), 1));
  CHECK_FALSE(is_quasistandard_sl(parse_sl("1 2\n2", three)));
  CHECK(is_quasistandard_sl(parse_sl("2 2\n3", three)));
}

TEST_CASE("letters round trip through columns") {
  const auto t = parse_sp("1 2\n2 2'\n2'", 3);
  CHECK(sp_from_letters(3, letter_columns(t)) == t);
}
