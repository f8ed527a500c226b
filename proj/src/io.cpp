#include "dominotab/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace dominotab {

using nlohmann::json;

ParseError::ParseError(const std::string& msg, int l, int c)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
      line(l),
      column(c) {}

namespace {

// 1-based line and column of a byte offset
std::pair<int, int> line_col(std::string_view text, std::size_t at) {
  at = std::min(at, text.size());
  int line = 1, col = 1;
  for (std::size_t k = 0; k < at; ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at(std::string_view text, std::size_t at, const std::string& msg) {
  auto [l, c] = line_col(text, at);
  throw ParseError(msg, l, c);
}

// ---- locating a value inside already-valid JSON text ----

using PathItem = std::variant<std::string, std::size_t>;
using Path = std::vector<PathItem>;

struct Scanner {
  std::string_view s;
  std::size_t p = 0;

  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  std::string string_token() {
    std::string out;
    ++p;  // opening quote
    while (p < s.size() && s[p] != '"') {
      if (s[p] == '\\') ++p;
      if (p < s.size()) out += s[p++];
    }
    ++p;
    return out;
  }
  void skip_value() {
    ws();
    if (p >= s.size()) return;
    char c = s[p];
    if (c == '"') {
      string_token();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      while (p < s.size()) {
        char d = s[p];
        if (d == '"') {
          string_token();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++p;
        if (depth == 0) break;
      }
    } else {
      while (p < s.size() && !std::strchr(",]} \t\r\n", s[p])) ++p;
    }
  }
  // Offset of the value at path, or of the deepest prefix that exists.
  std::size_t locate(const Path& path, std::size_t depth = 0) {
    ws();
    std::size_t here = p;
    if (depth == path.size() || p >= s.size()) return here;
    if (s[p] == '{' && std::holds_alternative<std::string>(path[depth])) {
      ++p;
      while (true) {
        ws();
        if (p >= s.size() || s[p] != '"') return here;
        std::string key = string_token();
        ws();
        ++p;  // colon
        if (key == std::get<std::string>(path[depth])) return locate(path, depth + 1);
        skip_value();
        ws();
        if (p < s.size() && s[p] == ',') ++p;
        else return here;
      }
    }
    if (s[p] == '[' && std::holds_alternative<std::size_t>(path[depth])) {
      ++p;
      for (std::size_t k = 0;; ++k) {
        ws();
        if (p >= s.size() || s[p] == ']') return here;
        if (k == std::get<std::size_t>(path[depth])) return locate(path, depth + 1);
        skip_value();
        ws();
        if (p < s.size() && s[p] == ',') ++p;
        else return here;
      }
    }
    return here;
  }
};

struct JsonContext {
  std::string_view text;
  Path base;

  [[noreturn]] void fail(Path path, const std::string& msg) const {
    Path full = base;
    full.insert(full.end(), path.begin(), path.end());
    Scanner sc{text};
    fail_at(text, sc.locate(full), msg);
  }
};

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t at = e.byte > 0 ? std::min(e.byte - 1, text.size()) : 0;
    // the lexer reports the end of the offending token; point at its start
    if (at < text.size() && text[at] == '"' && at > 0) {
      std::size_t q = text.rfind('"', at - 1);
      if (q != std::string_view::npos) at = q;
    } else {
      while (at > 0 && at < text.size() && std::isalnum(static_cast<unsigned char>(text[at - 1])) &&
             std::isalnum(static_cast<unsigned char>(text[at])))
        --at;
    }
    std::string msg = e.what();
    // drop nlohmann's own "[json.exception...] parse error at line l, column c: "
    auto cut = msg.find(": ", msg.find("column"));
    fail_at(text, at, cut == std::string::npos ? msg : msg.substr(cut + 2));
  }
}

Path join(Path p, PathItem x) {
  p.push_back(std::move(x));
  return p;
}

Partition partition_from(const json& j, const JsonContext& ctx, const Path& path) {
  if (!j.is_array()) ctx.fail(path, "expected an array of parts");
  std::vector<int> parts;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) ctx.fail(join(path, k), "expected an integer part");
    parts.push_back(j[k].get<int>());
  }
  try {
    Partition p(parts);
    return Partition(trimmed(p.parts()));
  } catch (const std::invalid_argument& e) {
    ctx.fail(path, e.what());
  }
}

SkewShape shape_from(const json& j, const JsonContext& ctx, const Path& path) {
  if (j.is_array()) return SkewShape(partition_from(j, ctx, path));
  if (!j.is_object() || !j.contains("outer")) ctx.fail(path, "expected {\"outer\": [...], \"inner\": [...]}");
  Partition outer = partition_from(j["outer"], ctx, join(path, "outer"));
  Partition inner = j.contains("inner") ? partition_from(j["inner"], ctx, join(path, "inner")) : Partition();
  if (!outer.contains(inner)) ctx.fail(path, "inner shape is not contained in the outer shape");
  return SkewShape(outer, inner);
}

int int_field(const json& j, const char* key, const JsonContext& ctx, const Path& path) {
  if (!j.contains(key)) ctx.fail(path, std::string("missing \"") + key + "\"");
  if (!j[key].is_number_integer()) ctx.fail(join(path, key), std::string("\"") + key + "\" must be an integer");
  return j[key].get<int>();
}

Tableau tableau_from(const json& j, const JsonContext& ctx, int offset) {
  if (!j.is_object()) ctx.fail({}, "expected a tableau object");
  if (!j.contains("type") || !j["type"].is_string()) ctx.fail({}, "missing \"type\" (\"young\" or \"domino\")");
  std::string type = j["type"];
  if (!j.contains("shape")) ctx.fail({}, "missing \"shape\"");
  SkewShape shape = shape_from(j["shape"], ctx, {"shape"});
  if (type == "young") {
    if (!j.contains("rows") || !j["rows"].is_array()) ctx.fail({}, "missing \"rows\"");
    const json& rows = j["rows"];
    std::vector<std::vector<int>> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array()) ctx.fail({"rows", r}, "expected an array of entries");
      std::vector<int> row;
      for (std::size_t k = 0; k < rows[r].size(); ++k) {
        if (!rows[r][k].is_number_integer()) ctx.fail({"rows", r, k}, "entries must be integers");
        row.push_back(rows[r][k].get<int>() - offset);
      }
      out.push_back(row);
    }
    if (out.size() > shape.outer.length()) ctx.fail({"rows", shape.outer.length()}, "more rows than the shape has");
    out.resize(shape.outer.length());
    for (std::size_t r = 0; r < out.size(); ++r)
      if (int(out[r].size()) != shape.outer.row(r) - shape.inner.row(r))
        ctx.fail(r < rows.size() ? Path{"rows", r} : Path{"rows"},
                 "row " + std::to_string(r) + " has the wrong length for " + format_shape(shape));
    YoungTableau t(shape, out);
    for (Square s : shape.squares()) {
      Square right{s.row, s.col + 1}, below{s.row + 1, s.col};
      std::size_t k = std::size_t(s.col - shape.inner.row(s.row));
      if (t.at(s) < 0) ctx.fail({"rows", std::size_t(s.row), k}, "negative entry");
      if (shape.contains(right) && t.at(right) < t.at(s))
        ctx.fail({"rows", std::size_t(s.row), k + 1}, "row is not weakly increasing");
      if (shape.contains(below) && t.at(below) <= t.at(s))
        ctx.fail({"rows", std::size_t(below.row), std::size_t(below.col - shape.inner.row(below.row))},
                 "column is not strictly increasing");
    }
    return t;
  }
  if (type != "domino") ctx.fail({"type"}, "unknown type \"" + type + "\"");
  if (!j.contains("dominoes") || !j["dominoes"].is_array()) ctx.fail({}, "missing \"dominoes\"");
  const json& ds = j["dominoes"];
  std::vector<PlacedDomino> placed;
  std::vector<int> ords;
  bool any_ord = false;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    Path at{"dominoes", k};
    const json& d = ds[k];
    if (!d.is_object()) ctx.fail(at, "expected a domino object");
    int r = int_field(d, "row", ctx, at), c = int_field(d, "col", ctx, at), e = int_field(d, "entry", ctx, at);
    if (!d.contains("orient") || !d["orient"].is_string()) ctx.fail(at, "missing \"orient\" (\"h\" or \"v\")");
    std::string o = d["orient"];
    if (o != "h" && o != "v") ctx.fail(join(at, "orient"), "orient must be \"h\" or \"v\"");
    placed.push_back({{{r, c}, o == "h" ? Orientation::horizontal : Orientation::vertical}, e - offset});
    if (d.contains("ordinate")) {
      any_ord = true;
      ords.push_back(int_field(d, "ordinate", ctx, at));
    } else {
      ords.push_back(-1);
    }
  }
  DominoTableau t(shape, placed);
  if (auto err = validate_ssdt(t)) {
    // validation indices refer to the sorted order; point at the input item
    std::size_t where = 0;
    int idx = err->kind == ValidationError::Kind::overlap ? err->second : err->first;
    if (idx >= 0) {
      const PlacedDomino& bad = t.dominoes[std::size_t(idx)];
      std::vector<std::size_t> hits;
      for (std::size_t k = 0; k < placed.size(); ++k)
        if (placed[k] == bad) hits.push_back(k);
      if (!hits.empty()) where = err->kind == ValidationError::Kind::overlap ? hits.back() : hits.front();
      ctx.fail({"dominoes", where}, err->message);
    }
    ctx.fail({"dominoes"}, err->message);
  }
  AnnotatedDomino out{t, {}};
  if (any_ord) {
    std::vector<std::size_t> used(placed.size(), 0);
    for (auto& p : t.dominoes)
      for (std::size_t k = 0; k < placed.size(); ++k)
        if (!used[k] && placed[k] == p) {
          used[k] = 1;
          out.ordinates.push_back(ords[k]);
          break;
        }
  }
  return out;
}

// ---- ASCII ----

std::string label(int entry, int ordinate) {
  std::string s = std::to_string(entry);
  if (ordinate >= 0) s += "_" + std::to_string(ordinate);
  return s;
}

// owner[r][c] >= 0 for squares of the shape; labels at their squares
std::string draw(const std::string& header, const SkewShape& shape, const std::map<Square, int>& owner,
                 const std::map<Square, std::string>& labels) {
  std::size_t width = 4;
  for (auto& [s, l] : labels) width = std::max(width, l.size() + 1);
  int stride = int(width) + 1;
  int rows = int(shape.outer.length()), cols = shape.outer.row(0);
  std::string out = header + "\n";
  if (rows == 0) return out;
  std::vector<std::string> g(std::size_t(2 * rows + 1), std::string(std::size_t(stride * cols + 1), ' '));
  auto own = [&](int r, int c) {
    auto it = owner.find({r, c});
    return it == owner.end() ? -1 : it->second;
  };
  auto vseg = [&](int r, int c) { return own(r, c - 1) != own(r, c); };  // left of (r, c)
  auto hseg = [&](int r, int c) { return own(r - 1, c) != own(r, c); };  // above (r, c)
  for (int r = 0; r <= rows; ++r)
    for (int c = 0; c <= cols; ++c) {
      if (r < rows && vseg(r, c)) g[std::size_t(2 * r + 1)][std::size_t(stride * c)] = '|';
      if (c < cols && hseg(r, c))
        for (int x = 1; x < stride; ++x) g[std::size_t(2 * r)][std::size_t(stride * c + x)] = '-';
      // straight runs pass through a lattice point, anything else is a corner
      bool up = r > 0 && vseg(r - 1, c), down = r < rows && vseg(r, c);
      bool left = c > 0 && hseg(r, c - 1), right = c < cols && hseg(r, c);
      char& at = g[std::size_t(2 * r)][std::size_t(stride * c)];
      if (up && down && !left && !right)
        at = '|';
      else if (up || down || left != right)
        at = '+';
      else if (left)
        at = '-';
    }
  for (auto& [s, l] : labels) g[std::size_t(2 * s.row + 1)].replace(std::size_t(stride * s.col + 1), l.size() + 1, " " + l);
  for (auto& line : g) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

struct AsciiBlock {
  std::string_view text;   // whole input, for positions
  std::size_t begin = 0;   // offset of the header line
  std::vector<std::pair<std::size_t, std::string_view>> lines;  // offset, content
};

Tableau parse_ascii_block(const AsciiBlock& b, int offset) {
  auto [hoff, header] = b.lines.front();
  std::size_t sp = header.find(' ');
  std::string_view kind = header.substr(0, sp);
  if (kind != "young" && kind != "domino") fail_at(b.text, hoff, "expected \"young\" or \"domino\" header");
  if (sp == std::string_view::npos) fail_at(b.text, hoff + header.size(), "missing shape after the header");
  SkewShape shape;
  try {
    shape = parse_shape(header.substr(sp + 1));
  } catch (const ParseError& e) {
    fail_at(b.text, hoff + sp + std::size_t(e.column), e.what());
  }
  int rows = int(shape.outer.length());
  // trailing blank grid lines may have been trimmed away
  std::string_view none;
  auto line_at = [&](int y) -> std::pair<std::size_t, std::string_view> {
    if (std::size_t(y) + 1 < b.lines.size()) return b.lines[std::size_t(y) + 1];
    return {b.lines.back().first + b.lines.back().second.size(), none};
  };
  auto ch = [&](int y, int x) -> char {
    auto l = line_at(y).second;
    return std::size_t(x) < l.size() ? l[std::size_t(x)] : ' ';
  };
  auto pos = [&](int y, int x) { return line_at(y).first + std::size_t(x); };
  // the right edge of the first nonempty row r sits at stride * outer.row(r)
  int stride = 5, first = 0;
  while (first < rows && shape.outer.row(std::size_t(first)) == shape.inner.row(std::size_t(first))) ++first;
  if (first < rows) {
    auto line = line_at(2 * first + 1).second;
    auto edge = line.find_last_of('|');
    int len = shape.outer.row(std::size_t(first));
    stride = edge != std::string_view::npos && int(edge) % len == 0 ? int(edge) / len : 0;
  }
  if (stride < 2) fail_at(b.text, pos(2 * first + 1, 0), "cannot find the right edge of the first row");
  // interior text of a square, trimmed
  auto interior = [&](Square s) {
    std::string t;
    for (int x = 1; x < stride; ++x) t += ch(2 * s.row + 1, stride * s.col + x);
    auto a = t.find_first_not_of(' ');
    if (a == std::string::npos) return std::pair<std::string, int>{"", 0};
    auto z = t.find_last_not_of(' ');
    return std::pair<std::string, int>{t.substr(a, z - a + 1), int(a) + 1};
  };
  auto parse_label = [&](Square s, bool allow_ordinate, int& ord) {
    auto [t, at] = interior(s);
    std::size_t where = pos(2 * s.row + 1, stride * s.col + at);
    if (t.empty()) fail_at(b.text, pos(2 * s.row + 1, stride * s.col + 1), "missing entry");
    std::size_t us = t.find('_');
    std::string e = t.substr(0, us);
    auto digits = [](const std::string& x) {
      return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (!digits(e)) fail_at(b.text, where, "bad entry \"" + t + "\"");
    ord = -1;
    if (us != std::string::npos) {
      std::string j = t.substr(us + 1);
      if (!allow_ordinate || !digits(j)) fail_at(b.text, where + us, "bad ordinate in \"" + t + "\"");
      ord = std::stoi(j);
    }
    return std::stoi(e) - offset;
  };
  auto open_right = [&](Square s) { return ch(2 * s.row + 1, stride * (s.col + 1)) == ' '; };
  auto open_below = [&](Square s) { return ch(2 * s.row + 2, stride * s.col + 1) == ' '; };

  if (kind == "young") {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rows));
    for (Square s : shape.squares()) {
      if ((shape.contains({s.row, s.col + 1}) && open_right(s)) || (shape.contains({s.row + 1, s.col}) && open_below(s)))
        fail_at(b.text, pos(2 * s.row + 1, stride * s.col + 1), "Young tableau squares must be separated");
      int ord;
      out[std::size_t(s.row)].push_back(parse_label(s, false, ord));
    }
    YoungTableau t(shape, out);
    for (Square s : shape.squares()) {
      Square right{s.row, s.col + 1}, below{s.row + 1, s.col};
      if (t.at(s) < 0) fail_at(b.text, pos(2 * s.row + 1, stride * s.col + 1), "negative entry");
      if (shape.contains(right) && t.at(right) < t.at(s))
        fail_at(b.text, pos(2 * right.row + 1, stride * right.col + 1), "row is not weakly increasing");
      if (shape.contains(below) && t.at(below) <= t.at(s))
        fail_at(b.text, pos(2 * below.row + 1, stride * below.col + 1), "column is not strictly increasing");
    }
    return t;
  }

  std::map<Square, int> taken;
  std::vector<PlacedDomino> placed;
  std::vector<int> ords;
  std::vector<std::size_t> where;
  bool any_ord = false;
  for (Square s : shape.squares()) {
    if (taken.count(s)) continue;
    Square right{s.row, s.col + 1}, below{s.row + 1, s.col};
    bool r = shape.contains(right) && open_right(s);
    bool d = shape.contains(below) && open_below(s);
    std::size_t at = pos(2 * s.row + 1, stride * s.col + 1);
    if (r && d) fail_at(b.text, at, "square is open both to the right and below");
    if (!r && !d) fail_at(b.text, at, "square does not belong to a domino");
    Square other = r ? right : below;
    if (taken.count(other)) fail_at(b.text, at, "overlapping dominoes");
    if (!interior(other).first.empty())
      fail_at(b.text, pos(2 * other.row + 1, stride * other.col + 1), "text in the second square of a domino");
    int ord;
    int e = parse_label(s, true, ord);
    any_ord = any_ord || ord >= 0;
    taken[s] = taken[other] = int(placed.size());
    placed.push_back({{s, r ? Orientation::horizontal : Orientation::vertical}, e});
    ords.push_back(ord);
    where.push_back(at);
  }
  DominoTableau t(shape, placed);
  if (auto err = validate_ssdt(t)) {
    int idx = err->first >= 0 ? err->first : 0;
    std::size_t at = b.lines.front().first;
    if (!t.dominoes.empty())
      for (std::size_t k = 0; k < placed.size(); ++k)
        if (placed[k] == t.dominoes[std::size_t(idx)]) at = where[k];
    fail_at(b.text, at, err->message);
  }
  AnnotatedDomino out{t, {}};
  if (any_ord)
    for (auto& p : t.dominoes)
      for (std::size_t k = 0; k < placed.size(); ++k)
        if (placed[k] == p) out.ordinates.push_back(ords[k]);
  return out;
}

std::vector<AsciiBlock> split_blocks(std::string_view text) {
  std::vector<AsciiBlock> out;
  std::size_t p = 0;
  while (p <= text.size()) {
    std::size_t e = text.find('\n', p);
    if (e == std::string_view::npos) e = text.size();
    std::string_view line = text.substr(p, e - p);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // '#' lines are comments (the CLI uses them to label its output)
    if (line.starts_with("#")) line = {};
    bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
    if (line.starts_with("young") || line.starts_with("domino")) {
      out.push_back({text, p, {}});
    } else if (!blank && out.empty()) {
      fail_at(text, p, "expected \"young\" or \"domino\" header");
    }
    if (!out.empty()) out.back().lines.emplace_back(p, line);
    if (e == text.size()) break;
    p = e + 1;
  }
  // drop trailing blank lines of each block
  for (auto& b : out)
    while (b.lines.size() > 1 && b.lines.back().second.find_first_not_of(" \t") == std::string_view::npos)
      b.lines.pop_back();
  return out;
}

std::string_view trim(std::string_view s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  auto z = s.find_last_not_of(" \t\r\n");
  return s.substr(a, z - a + 1);
}

}  // namespace

// ---- shapes ----

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && (text[p] == ' ' || text[p] == '(' || text[p] == ')')) ++p;
  };
  skip();
  while (p < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[p]))) fail_at(text, p, "expected a part");
    int x = 0;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) x = 10 * x + (text[p++] - '0');
    parts.push_back(x);
    skip();
    if (p < text.size()) {
      if (text[p] != ',') fail_at(text, p, "expected ','");
      ++p;
      skip();
      if (p == text.size()) fail_at(text, p, "expected a part after ','");
    }
  }
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (parts[k] > parts[k - 1]) fail_at(text, 0, "parts must be weakly decreasing");
  return Partition(trimmed(parts));
}

SkewShape parse_shape(std::string_view text) {
  std::size_t slash = text.find('/');
  Partition outer = parse_partition(text.substr(0, slash));
  Partition inner;
  if (slash != std::string_view::npos) {
    try {
      inner = parse_partition(text.substr(slash + 1));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), 1,
                       int(slash) + 1 + e.column);
    }
  }
  if (!outer.contains(inner)) fail_at(text, slash, "inner shape is not contained in the outer shape");
  return SkewShape(outer, inner);
}

std::string format_shape(const SkewShape& s) {
  auto parts = [](const Partition& p) {
    std::string out;
    for (std::size_t k = 0; k < p.length(); ++k) out += (k ? "," : "") + std::to_string(p.row(k));
    return out;
  };
  std::string out = parts(s.outer);
  if (!s.inner.empty()) out += "/" + parts(s.inner);
  return out;
}

// ---- JSON ----

namespace {

nlohmann::ordered_json shape_json(const SkewShape& s) {
  return {{"outer", s.outer.parts()}, {"inner", s.inner.parts()}};
}

}  // namespace

std::string to_json(const YoungTableau& t, int offset) {
  std::ostringstream os;
  os << "{\"type\": \"young\", \"shape\": " << shape_json(t.shape).dump() << ", \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    json row = json::array();
    for (int x : t.rows[r]) row.push_back(x + offset);
    os << (r ? ", " : "") << row.dump();
  }
  os << "]}";
  return os.str();
}

std::string to_json(const DominoTableau& t, int offset, const std::vector<int>& ordinates) {
  std::ostringstream os;
  os << "{\"type\": \"domino\", \"shape\": " << shape_json(t.shape).dump() << ", \"dominoes\": [";
  for (std::size_t k = 0; k < t.dominoes.size(); ++k) {
    const auto& p = t.dominoes[k];
    os << (k ? ",\n  " : "\n  ") << "{\"row\": " << p.d.anchor.row << ", \"col\": " << p.d.anchor.col
       << ", \"orient\": \"" << (p.d.vertical() ? 'v' : 'h') << "\", \"entry\": " << p.entry + offset;
    if (k < ordinates.size() && ordinates[k] >= 0) os << ", \"ordinate\": " << ordinates[k];
    os << "}";
  }
  os << (t.dominoes.empty() ? "]}" : "\n]}");
  return os.str();
}

std::string to_json(const Tableau& t, int offset) {
  if (auto* y = std::get_if<YoungTableau>(&t)) return to_json(*y, offset);
  auto& d = std::get<AnnotatedDomino>(t);
  return to_json(d.tableau, offset, d.ordinates);
}

// ---- ASCII ----

std::string to_ascii(const YoungTableau& t, int offset) {
  std::map<Square, int> owner;
  std::map<Square, std::string> labels;
  int k = 0;
  for (Square s : t.shape.squares()) {
    owner[s] = k++;
    labels[s] = std::to_string(t.at(s) + offset);
  }
  return draw("young " + format_shape(t.shape), t.shape, owner, labels);
}

std::string to_ascii(const DominoTableau& t, int offset, const std::vector<int>& ordinates) {
  std::map<Square, int> owner;
  std::map<Square, std::string> labels;
  for (std::size_t k = 0; k < t.dominoes.size(); ++k) {
    const auto& p = t.dominoes[k];
    owner[p.d.first()] = owner[p.d.second()] = int(k);
    labels[p.d.first()] = label(p.entry + offset, k < ordinates.size() ? ordinates[k] : -1);
  }
  return draw("domino " + format_shape(t.shape), t.shape, owner, labels);
}

std::string to_ascii(const Tableau& t, int offset) {
  if (auto* y = std::get_if<YoungTableau>(&t)) return to_ascii(*y, offset);
  auto& d = std::get<AnnotatedDomino>(t);
  return to_ascii(d.tableau, offset, d.ordinates);
}

// ---- parsing ----

std::vector<Tableau> parse_tableaux(std::string_view text, int offset) {
  std::string_view body = trim(text);
  std::vector<Tableau> out;
  if (body.empty()) return out;
  if (body.front() == '{' || body.front() == '[') {
    json j = parse_json_text(text);
    if (j.is_array()) {
      for (std::size_t k = 0; k < j.size(); ++k) out.push_back(tableau_from(j[k], {text, {k}}, offset));
    } else {
      out.push_back(tableau_from(j, {text, {}}, offset));
    }
    return out;
  }
  for (auto& b : split_blocks(text)) out.push_back(parse_ascii_block(b, offset));
  return out;
}

Tableau parse_tableau(std::string_view text, int offset) {
  auto all = parse_tableaux(text, offset);
  if (all.size() != 1) {
    auto [l, c] = line_col(text, text.size());
    throw ParseError("expected exactly one tableau, found " + std::to_string(all.size()), l, c);
  }
  return all.front();
}

}  // namespace dominotab
