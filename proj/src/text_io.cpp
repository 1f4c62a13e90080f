#include "diamond/text_io.hpp"

#include <sstream>

#include "diamond/errors.hpp"

namespace diamond {

namespace {

std::string cell_text(const GridCell& c) {
  switch (c.kind) {
    case GridCell::Kind::Vacated:
      return ".";
    case GridCell::Kind::Star:
      return c.label ? "*" + std::to_string(c.label) : "*";
    case GridCell::Kind::Filled:
      return to_string(c.letter);
  }
  return "?";
}

GridCell parse_cell(const std::string& tok) {
  if (tok == ".") return GridCell::vacated();
  if (!tok.empty() && tok[0] == '*') {
    if (tok.size() == 1) return GridCell::star();
    try {
      return GridCell::star(std::stoi(tok.substr(1)));
    } catch (const std::logic_error&) {
      throw InputError("bad star token: " + tok);
    }
  }
  return GridCell::filled(parse_letter(tok));
}

}  // namespace

std::string render(const Grid& g) {
  std::ostringstream os;
  const int h = g.height();
  for (int r = 0; r < h; ++r) {
    std::string line;
    for (const auto& col : g.columns) {
      if (r >= static_cast<int>(col.size())) break;
      std::string f = cell_text(col[r]);
      if (f.size() < 3) f.resize(3, ' ');
      else f += ' ';
      line += f;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

Grid parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!rows.empty() && toks.size() > rows.back().size()) throw InputError("row lengths must weakly decrease");
    rows.push_back(std::move(toks));
  }
  Grid g;
  if (rows.empty()) return g;
  g.columns.resize(rows[0].size());
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) g.columns[j].push_back(parse_cell(row[j]));
  return g;
}

std::string render(const SlTableau& t) { return render(to_grid(t)); }

std::string render(const SpTableau& t) { return render(to_grid(t)); }

SlTableau parse_sl(const std::string& text, Alphabet alphabet) {
  return to_straight(sl_skew_from_grid(parse_grid(text), alphabet));
}

SpTableau parse_sp(const std::string& text, int n) {
  SpTableau t = to_straight(sp_skew_from_grid(parse_grid(text), n));
  validate_sp(t);
  return t;
}

}  // namespace diamond
