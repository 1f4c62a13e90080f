#include "diamond/json_io.hpp"

#include "diamond/errors.hpp"

namespace diamond {

Json letter_to_json(Letter x, bool extended) {
  if (extended) return Json{{"m", x.magnitude()}, {"b", x.is_barred()}};
  if (x.is_barred() && x.is_zero()) return "-0";
  return x.is_barred() ? -x.magnitude() : x.magnitude();
}

Letter letter_from_json(const Json& j) {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < -kMaxRank || v > kMaxRank) throw InputError("letter out of range");
    return v < 0 ? Letter::barred(static_cast<int>(-v)) : Letter::plain(static_cast<int>(v));
  }
  if (j.is_string() && j.get<std::string>() == "-0") return Letter::barred(0);
  if (j.is_object() && j.contains("m") && j.contains("b") && j["m"].is_number_integer() && j["b"].is_boolean()) {
    const int m = j["m"].get<int>();
    if (m < 0 || m > kMaxRank) throw InputError("letter out of range");
    return {m, j["b"].get<bool>()};
  }
  throw InputError("bad letter: " + j.dump());
}

namespace {

int get_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) throw InputError("missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxRank) throw InputError("rank out of range");
  return n;
}

std::string get_kind(const Json& j) {
  if (!j.contains("kind") || !j["kind"].is_string()) throw InputError("missing field 'kind'");
  return j["kind"].get<std::string>();
}

const Json& get_columns(const Json& j) {
  if (!j.contains("columns") || !j["columns"].is_array()) throw InputError("missing array 'columns'");
  return j["columns"];
}

std::vector<LetterColumn> read_columns(const Json& cols) {
  std::vector<LetterColumn> out;
  for (const auto& c : cols) {
    if (!c.is_array()) throw InputError("column must be an array");
    LetterColumn col;
    for (const auto& x : c) col.push_back(letter_from_json(x));
    out.push_back(col);
  }
  return out;
}

Json write_cells(const Grid& g, bool extended, Json& inner) {
  Json cols = Json::array();
  inner = Json::array();
  for (const auto& col : g.columns) {
    Json c = Json::array();
    int v = 0;
    for (const auto& cell : col) {
      if (cell.kind == GridCell::Kind::Vacated) {
        ++v;
        continue;
      }
      c.push_back(cell.kind == GridCell::Kind::Star ? Json(nullptr) : letter_to_json(cell.letter, extended));
    }
    inner.push_back(v);
    cols.push_back(c);
  }
  return cols;
}

Grid read_skew_grid(const Json& j) {
  const Json& cols = get_columns(j);
  std::vector<int> inner(cols.size(), 0);
  if (j.contains("inner")) {
    if (!j["inner"].is_array() || j["inner"].size() != cols.size()) throw InputError("'inner' must match 'columns'");
    for (std::size_t k = 0; k < cols.size(); ++k) inner[k] = j["inner"][k].get<int>();
  }
  Grid g;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (!cols[k].is_array() || inner[k] < 0) throw InputError("bad skew column");
    std::vector<GridCell> col(inner[k], GridCell::vacated());
    for (const auto& x : cols[k]) col.push_back(x.is_null() ? GridCell::star() : GridCell::filled(letter_from_json(x)));
    g.columns.push_back(col);
  }
  if (j.contains("star") && !j["star"].is_null()) {
    const Json& s = j["star"];
    if (!s.is_array() || s.size() != 2) throw InputError("'star' must be [row, col]");
    const int r = s[0].get<int>() - 1;
    const int c = s[1].get<int>() - 1;
    if (c < 0 || c >= static_cast<int>(g.columns.size()) || r < 0 || r >= static_cast<int>(g.columns[c].size()) ||
        g.columns[c][r].kind != GridCell::Kind::Star)
      throw InputError("'star' does not point at the star cell");
  }
  return g;
}

template <class Skew>
Json skew_json(const Skew& t, bool extended, const std::string& kind, int n) {
  Json inner;
  Json cols = write_cells(to_grid(t), extended, inner);
  Json star = t.star ? Json::array({t.star->row + 1, t.star->col + 1}) : Json(nullptr);
  return Json{{"n", n}, {"kind", kind}, {"inner", inner}, {"columns", cols}, {"star", star}};
}

}  // namespace

Json to_json(const SlTableau& t) {
  Json cols = Json::array();
  for (const auto& c : t.columns) {
    Json col = Json::array();
    for (Letter x : c) col.push_back(letter_to_json(x));
    cols.push_back(col);
  }
  Json out{{"n", t.alphabet.n}, {"kind", "sl"}, {"columns", cols}};
  if (t.alphabet.kind == AlphabetKind::Symplectic) out["alphabet"] = "symplectic";
  return out;
}

Json to_json(const SpTableau& t) {
  Json cols = Json::array();
  for (const auto& c : t.columns) {
    Json col = Json::array();
    for (Letter x : c.letters()) col.push_back(letter_to_json(x));
    cols.push_back(col);
  }
  return Json{{"n", t.n}, {"kind", "sp"}, {"columns", cols}};
}

SpTableau sp_from_json(const Json& j) {
  const int n = get_n(j);
  if (j.contains("kind") && get_kind(j) != "sp") throw InputError("expected kind 'sp'");
  return sp_from_letters(n, read_columns(get_columns(j)));
}

SlTableau sl_from_json(const Json& j) {
  const int n = get_n(j);
  if (j.contains("kind") && get_kind(j) != "sl") throw InputError("expected kind 'sl'");
  Alphabet alphabet{n, AlphabetKind::Classical};
  if (j.contains("alphabet") && j["alphabet"] == "symplectic") alphabet.kind = AlphabetKind::Symplectic;
  SlTableau t{alphabet, read_columns(get_columns(j))};
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (t.columns[k].empty()) throw InputError("empty column");
    if (k > 0 && t.columns[k].size() > t.columns[k - 1].size()) throw InputError("column heights must weakly decrease");
    for (Letter x : t.columns[k])
      if (!alphabet.contains(x)) throw InputError("letter " + to_string(x) + " outside alphabet");
  }
  return t;
}

AnyTableau tableau_from_json(const Json& j) {
  if (get_kind(j) == "sp") return sp_from_json(j);
  if (get_kind(j) == "sl") return sl_from_json(j);
  throw InputError("kind must be 'sl' or 'sp'");
}

Json to_json(const SlSkewTableau& t, bool extended) { return skew_json(t, extended, "sl", t.alphabet.n); }

Json to_json(const SpSkewTableau& t, bool extended) {
  Json out = skew_json(t, extended, "sp", t.n);
  out["zero_present"] = t.zero_present();
  return out;
}

SlSkewTableau sl_skew_from_json(const Json& j) {
  const int n = get_n(j);
  Alphabet alphabet{n, AlphabetKind::Classical};
  if (j.contains("alphabet") && j["alphabet"] == "symplectic") alphabet.kind = AlphabetKind::Symplectic;
  return sl_skew_from_grid(read_skew_grid(j), alphabet);
}

SpSkewTableau sp_skew_from_json(const Json& j) { return sp_skew_from_grid(read_skew_grid(j), get_n(j)); }

Json trace_to_json(const std::vector<SpSkewTableau>& trace) {
  bool extended = false;
  for (const auto& s : trace) extended = extended || s.zero_present();
  Json out = Json::array();
  for (const auto& s : trace) out.push_back(to_json(s, extended));
  return out;
}

Json trace_to_json(const std::vector<SlSkewTableau>& trace) {
  Json out = Json::array();
  for (const auto& s : trace) out.push_back(to_json(s));
  return out;
}

}  // namespace diamond
