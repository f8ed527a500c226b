#include "dominotab/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dominotab {

YoungTableau::YoungTableau(SkewShape s, std::vector<std::vector<int>> r)
    : shape(std::move(s)), rows(std::move(r)) {
  rows.resize(shape.outer.length());
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (int(rows[k].size()) != shape.outer.row(k) - shape.inner.row(k))
      throw std::invalid_argument("row " + std::to_string(k) + " has the wrong length for " +
                                  to_string(shape));
}

Weight YoungTableau::weight() const {
  Weight w;
  for (const auto& row : rows)
    for (int x : row) {
      if (x >= int(w.size())) w.resize(x + 1, 0);
      ++w[x];
    }
  return w;
}

bool is_semistandard(const YoungTableau& t) {
  for (Square s : t.shape.squares()) {
    if (t.at(s) < 0) return false;
    Square right{s.row, s.col + 1}, below{s.row + 1, s.col};
    if (t.shape.contains(right) && t.at(right) < t.at(s)) return false;
    if (t.shape.contains(below) && t.at(below) <= t.at(s)) return false;
  }
  return true;
}

std::string to_string(const YoungTableau& t) {
  std::ostringstream os;
  os << to_string(t.shape) << " [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? "|" : "");
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) os << (k ? "," : "") << t.rows[r][k];
  }
  os << "]";
  return os.str();
}

bool is_yamanouchi_word(const Word& w) {
  std::map<int, int> seen;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int x = *it;
    ++seen[x];
    if (x > 0 && seen[x] > seen[x - 1]) return false;
  }
  return true;
}

Word column_word(const YoungTableau& t) {
  std::vector<Square> sq = t.shape.squares();
  std::sort(sq.begin(), sq.end(), [](Square a, Square b) {
    return a.col != b.col ? a.col < b.col : a.row > b.row;
  });
  Word w;
  for (Square s : sq) w.push_back(t.at(s));
  return w;
}

std::string DominanceFailure::message() const {
  if (kind == Kind::weight_mismatch) return "weight does not match the target shape";
  std::ostringstream os;
  os << "condition (3) fails at " << row << "_" << ordinate;
  return os.str();
}

DominanceResult augment_cells(const std::vector<int>& entry, const std::vector<int>& pos,
                              const SkewShape& target) {
  int rows = int(target.outer.length());
  for (int x : entry) rows = std::max(rows, x + 1);
  std::vector<std::vector<int>> by_entry(rows);
  for (std::size_t k = 0; k < entry.size(); ++k) by_entry[entry[k]].push_back(int(k));
  for (int i = 0; i < rows; ++i)
    if (int(by_entry[i].size()) != target.outer.row(i) - target.inner.row(i))
      return DominanceFailure{DominanceFailure::Kind::weight_mismatch, i, -1};

  Augmentation aug{target, std::vector<int>(entry.size(), -1)};
  // cell_at[i][j - kappa_i] is the cell carrying i_j
  std::vector<std::vector<int>> cell_at(rows);
  for (int i = 0; i < rows; ++i) {
    auto& cells = by_entry[i];
    std::sort(cells.begin(), cells.end(), [&](int a, int b) { return pos[a] > pos[b]; });
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k > 0 && pos[cells[k]] == pos[cells[k - 1]])
        throw std::invalid_argument("equal entries share a position");
      aug.ordinate[cells[k]] = target.inner.row(i) + int(k);
    }
    cell_at[i] = cells;
  }
  for (int i = 0; i + 1 < rows; ++i) {
    int lo = std::max(target.inner.row(i), target.inner.row(i + 1));
    int hi = std::min(target.outer.row(i), target.outer.row(i + 1));
    for (int j = lo; j < hi; ++j) {
      int upper = cell_at[i][j - target.inner.row(i)];
      int lower = cell_at[i + 1][j - target.inner.row(i + 1)];
      if (!(pos[lower] < pos[upper]))
        return DominanceFailure{DominanceFailure::Kind::order_violation, i, j};
    }
  }
  return aug;
}

DominanceResult dominance_young(const YoungTableau& t, const SkewShape& target) {
  std::vector<int> entry, pos;
  for (Square s : t.shape.squares()) {
    entry.push_back(t.at(s));
    pos.push_back(content(s));
  }
  return augment_cells(entry, pos, target);
}

DominanceResult dominance_star(const YoungTableau& t0, const YoungTableau& t1,
                               const SkewShape& target) {
  // Contents of t1 are shifted past every content of t0; only their relative
  // order matters for condition (3).
  int hi0 = 0, lo1 = 0;
  for (Square s : t0.shape.squares()) hi0 = std::max(hi0, content(s));
  for (Square s : t1.shape.squares()) lo1 = std::min(lo1, content(s));
  int shift = hi0 - lo1 + 1;
  std::vector<int> entry, pos;
  for (Square s : t0.shape.squares()) {
    entry.push_back(t0.at(s));
    pos.push_back(content(s));
  }
  for (Square s : t1.shape.squares()) {
    entry.push_back(t1.at(s));
    pos.push_back(content(s) + shift);
  }
  return augment_cells(entry, pos, target);
}

YoungTableau rectify(const YoungTableau& t, SlideOrder order) {
  std::vector<int> outer = t.shape.outer.parts(), inner(outer.size(), 0);
  for (std::size_t r = 0; r < inner.size(); ++r) inner[r] = t.shape.inner.row(r);
  std::vector<std::vector<int>> grid(outer.size());
  for (std::size_t r = 0; r < outer.size(); ++r) {
    grid[r].assign(outer[r], -1);
    for (int c = inner[r]; c < outer[r]; ++c) grid[r][c] = t.at({int(r), c});
  }
  auto len = [&](const std::vector<int>& v, int r) {
    return r >= 0 && r < int(v.size()) ? v[r] : 0;
  };
  auto filled = [&](int r, int c) {
    return r < int(outer.size()) && c < outer[r] && c >= inner[r];
  };
  for (;;) {
    int pick = -1;
    for (int r = 0; r < int(inner.size()); ++r) {
      if (inner[r] == 0 || len(inner, r + 1) >= inner[r]) continue;
      if (pick < 0 || order == SlideOrder::bottom_corner_first) pick = r;
      if (order == SlideOrder::top_corner_first) break;
    }
    if (pick < 0) break;
    int hr = pick, hc = --inner[pick];
    for (;;) {
      bool right = filled(hr, hc + 1), below = filled(hr + 1, hc);
      if (!right && !below) break;
      if (below && (!right || grid[hr + 1][hc] <= grid[hr][hc + 1])) {
        grid[hr][hc] = grid[hr + 1][hc];
        ++hr;
      } else {
        grid[hr][hc] = grid[hr][hc + 1];
        ++hc;
      }
    }
    if (hc != outer[hr] - 1) throw std::logic_error("slide ended inside the shape");
    --outer[hr];
    grid[hr].pop_back();
  }
  std::vector<std::vector<int>> rows;
  for (auto& row : grid)
    if (!row.empty()) rows.push_back(row);
  std::vector<int> parts;
  for (auto& row : rows) parts.push_back(int(row.size()));
  return YoungTableau(SkewShape(Partition(parts)), rows);
}

int minimal_slack(const std::vector<int>& p0, const std::vector<int>& p1) {
  int a = int(p0.size()), b = int(p1.size());
  for (int k = std::max(0, b - a); k <= b; ++k) {
    bool ok = true;
    for (int j = k; j < std::min(k + a, b) && ok; ++j) ok = p1[j] < p0[j - k];
    if (ok) return k;
  }
  throw std::logic_error("no dominant shift found");
}

YoungTableau rotate(const YoungTableau& t, int rows, int cols, int top) {
  SkewShape shape = rotated(t.shape, rows, cols);
  std::vector<std::vector<int>> out(shape.outer.length());
  for (std::size_t r = 0; r < out.size(); ++r) out[r].resize(shape.outer.row(r) - shape.inner.row(r));
  YoungTableau res(shape, out);
  for (Square s : t.shape.squares()) res.at(rotated(s, rows, cols)) = top - t.at(s);
  return res;
}

namespace {

int max_entry(const YoungTableau& t) {
  int m = -1;
  for (const auto& row : t.rows)
    for (int x : row) m = std::max(m, x);
  return m;
}

std::optional<YoungTableau> raise_young(int i, const YoungTableau& t) {
  std::vector<Square> cells[2];
  for (Square s : t.shape.squares())
    if (t.at(s) == i || t.at(s) == i + 1) cells[t.at(s) - i].push_back(s);
  std::vector<int> p[2];
  for (int h = 0; h < 2; ++h) {
    std::sort(cells[h].begin(), cells[h].end(),
              [](Square a, Square b) { return content(a) > content(b); });
    for (Square s : cells[h]) p[h].push_back(content(s));
  }
  int k = minimal_slack(p[0], p[1]);
  if (k == 0) return std::nullopt;
  int a = int(p[0].size()), b = int(p[1].size());
  // Hole at i_j; row i ordinates run k..k+a-1, row i+1 ordinates 0..b-1.
  for (int j = k - 1;; ++j) {
    bool has_up = j + 1 - k < a, has_down = j < b;
    if (!has_up && !has_down) throw std::logic_error("hole reached a corner in row i");
    if (has_down && (!has_up || p[1][j] > p[0][j + 1 - k])) {
      YoungTableau res = t;
      res.at(cells[1][j]) = i;
      return res;
    }
  }
}

}  // namespace

std::optional<YoungTableau> coplactic_young(Coplactic kind, int i, const YoungTableau& t) {
  if (i < 0) throw std::invalid_argument("negative coplactic index");
  if (kind == Coplactic::e) return raise_young(i, t);
  int top = std::max(max_entry(t), i + 1);
  int rows = int(t.shape.outer.length()), cols = t.shape.outer.row(0);
  auto r = raise_young(top - 1 - i, rotate(t, rows, cols, top));
  if (!r) return std::nullopt;
  return rotate(*r, rows, cols, top);
}

YoungTableau canonical(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < lambda.length(); ++r) rows.emplace_back(lambda.row(r), int(r));
  return YoungTableau(SkewShape(lambda), rows);
}

bool is_lr(const YoungTableau& t0, const YoungTableau& t1) {
  Word w = column_word(t0), w1 = column_word(t1);
  w.insert(w.end(), w1.begin(), w1.end());
  return is_yamanouchi_word(w);
}

namespace {

// Fill horizontal strips entry by entry. size_of(k) returns the required
// strip size for entry k, or -1 when any size is allowed.
void fill_strips(const SkewShape& shape, std::vector<int>& cur, int k, int entries,
                 const std::function<int(int)>& size_of, std::vector<std::vector<int>>& rows,
                 std::vector<YoungTableau>& out) {
  int rest = 0;
  for (std::size_t r = 0; r < cur.size(); ++r) rest += shape.outer.row(r) - cur[r];
  if (rest == 0) {
    bool ok = true;
    for (int q = k; q < entries && ok; ++q) ok = size_of(q) <= 0;
    if (ok) out.emplace_back(shape, rows);
    return;
  }
  if (k >= entries) return;
  std::vector<int> old = cur;
  int want = size_of(k);
  // choose how many squares to add in each row, row by row
  std::function<void(std::size_t, int)> row_choice = [&](std::size_t r, int added) {
    if (r == cur.size()) {
      if (want >= 0 && added != want) return;
      fill_strips(shape, cur, k + 1, entries, size_of, rows, out);
      return;
    }
    int cap = shape.outer.row(r);
    if (r > 0) cap = std::min(cap, old[r - 1]);
    for (int t = 0; old[r] + t <= cap; ++t) {
      if (want >= 0 && added + t > want) break;
      cur[r] = old[r] + t;
      for (int q = 0; q < t; ++q) rows[r].push_back(k);
      row_choice(r + 1, added + t);
      for (int q = 0; q < t; ++q) rows[r].pop_back();
      cur[r] = old[r];
    }
  };
  row_choice(0, 0);
}

}  // namespace

std::vector<YoungTableau> enumerate_sst(const SkewShape& shape, int n) {
  std::vector<YoungTableau> out;
  std::vector<int> cur(shape.outer.length());
  for (std::size_t r = 0; r < cur.size(); ++r) cur[r] = shape.inner.row(r);
  std::vector<std::vector<int>> rows(cur.size());
  fill_strips(shape, cur, 0, n, [](int) { return -1; }, rows, out);
  return out;
}

std::vector<YoungTableau> enumerate_sst_weight(const SkewShape& shape, const Weight& weight) {
  std::vector<YoungTableau> out;
  if (std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) return out;
  std::vector<int> cur(shape.outer.length());
  for (std::size_t r = 0; r < cur.size(); ++r) cur[r] = shape.inner.row(r);
  std::vector<std::vector<int>> rows(cur.size());
  fill_strips(shape, cur, 0, int(weight.size()),
              [&](int k) { return k < int(weight.size()) ? weight[k] : 0; }, rows, out);
  return out;
}

namespace {

std::vector<Square> standard_squares(const YoungTableau& t) {
  std::vector<Square> sq = t.shape.squares();
  std::stable_sort(sq.begin(), sq.end(), [&](Square a, Square b) {
    return t.at(a) != t.at(b) ? t.at(a) < t.at(b) : a.col < b.col;
  });
  return sq;
}

}  // namespace

StandardChain standardise(const YoungTableau& t) {
  StandardChain chain{t.shape.inner};
  for (Square s : standard_squares(t)) {
    auto next = with_squares(chain.back(), {s});
    if (!next) throw std::logic_error("standardisation of a non-semistandard tableau");
    chain.push_back(*next);
  }
  return chain;
}

std::vector<int> standard_entries(const YoungTableau& t) {
  std::vector<int> e;
  for (Square s : standard_squares(t)) e.push_back(t.at(s));
  return e;
}

bool is_square_chain(const StandardChain& chain) {
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!chain[k].contains(chain[k - 1]) || chain[k].size() != chain[k - 1].size() + 1)
      return false;
  return true;
}

YoungTableau destandardise(const StandardChain& chain, const std::vector<int>& entries) {
  if (chain.empty() || entries.size() + 1 != chain.size() || !is_square_chain(chain))
    throw std::invalid_argument("destandardise needs a square chain matching the entries");
  SkewShape shape(chain.back(), chain.front());
  std::vector<std::vector<int>> rows(shape.outer.length());
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r].resize(shape.outer.row(r) - shape.inner.row(r));
  YoungTableau t(shape, rows);
  for (std::size_t k = 1; k < chain.size(); ++k) t.at(difference(chain[k], chain[k - 1])[0]) = entries[k - 1];
  return t;
}

}  // namespace dominotab
