#include "dominotab/coplactic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dominotab {

namespace {

using Cell = std::pair<int, int>;  // (row 0/1, ordinate)

Domino hor(int r, int c) { return {{r, c}, Orientation::horizontal}; }
Domino ver(int r, int c) { return {{r, c}, Orientation::vertical}; }

struct Engine {
  int i;
  std::vector<PlacedDomino> ds;
  std::map<Cell, int> at;
  std::vector<int> touched;
  std::vector<CoplacticStep> steps;

  int find(int row, int ord) const {
    auto it = at.find({row, ord});
    return it == at.end() ? -1 : it->second;
  }

  void replace(int hr, int hj, int sr, int sj) {
    int x = at.at({sr, sj});
    at.erase({sr, sj});
    at[{hr, hj}] = x;
    if (sr != hr) {
      ds[x].entry = i;
      touched.push_back(x);
    }
    steps.push_back({CoplacticStep::Kind::replace, hr, hj, sr, sj, 0});
  }

  // Moves the hole from i_j until it runs out of row i+1. Getting stuck in
  // row i would mean the slack was not minimal.
  void run(int j) {
    int h = 0;
    for (;;) {
      if (h == 1) {
        if (find(1, j + 1) < 0) return;
        replace(1, j, 1, j + 1);
        ++j;
        continue;
      }
      int u = find(0, j + 1), w = find(1, j);
      if (u < 0 && w < 0) throw std::logic_error("hole stuck in row i");
      bool simple = u < 0 || w < 0;
      if (!simple) {
        const Domino &a = ds[u].d, &b = ds[w].d;
        simple = is_skew_diagram({a.first(), a.second(), b.first(), b.second()});
      }
      if (simple) {
        bool take_up = w < 0 || (u >= 0 && ds[u].pos() > ds[w].pos());
        if (take_up) {
          replace(0, j, 0, j + 1);
          ++j;
        } else {
          replace(0, j, 1, j);
          h = 1;
        }
        continue;
      }
      const Domino up = ds[u].d, dn = ds[w].d;
      if (up.vertical() || !dn.vertical()) throw std::logic_error("unexpected configuration");
      int r0 = up.anchor.row, c0 = up.anchor.col;
      if (dn.anchor.row == r0 + 1 && dn.anchor.col == c0 + 1) {
        int v = find(1, j + 1);
        if (v < 0 || ds[v].d != ver(r0 + 1, c0)) throw std::logic_error("T0 pattern incomplete");
        ds[u].d = ver(r0, c0);
        ds[w] = {ver(r0, c0 + 1), i};
        ds[v].d = hor(r0 + 2, c0);
        at[{0, j}] = w;
        at[{1, j}] = v;
        at.erase({1, j + 1});
        touched.insert(touched.end(), {u, w, v});
        steps.push_back({CoplacticStep::Kind::t0, 0, j, 0, 0, 0});
        h = 1;
        ++j;
        continue;
      }
      if (dn.anchor.row != r0 || dn.anchor.col != c0 + 2)
        throw std::logic_error("no transformation applies");
      int cb = dn.anchor.col;
      std::vector<int> top, bottom;
      for (int m = 1;; ++m) {
        int x = find(0, j + m), y = find(1, j + m);
        if (x < 0 || y < 0 || ds[x].d != hor(r0, cb - 2 * m) || ds[y].d != hor(r0 + 1, cb - 2 * m))
          break;
        top.push_back(x);
        bottom.push_back(y);
      }
      int k = int(top.size());
      if (k == 0) throw std::logic_error("T1 pattern incomplete");
      // row0[m] becomes i_{j+m} (row0[k] the vertical one), bottom[m] becomes (i+1)_{j+m}
      std::vector<int> row0{w};
      row0.insert(row0.end(), top.begin(), top.end());
      std::vector<int>& row1 = bottom;
      for (int m = 0; m < k; ++m) {
        ds[row0[m]] = {hor(r0, cb - 2 * m - 1), i};
        at[{0, j + m}] = row0[m];
        ds[row1[m]] = {hor(r0 + 1, cb - 2 * m - 1), i + 1};
        at[{1, j + m}] = row1[m];
      }
      ds[row0[k]] = {ver(r0, cb - 2 * k), i};
      at[{0, j + k}] = row0[k];
      at.erase({1, j + k});
      touched.insert(touched.end(), row0.begin(), row0.end());
      touched.insert(touched.end(), row1.begin(), row1.end());
      steps.push_back({CoplacticStep::Kind::t1, 0, j, 0, 0, k});
      h = 1;
      j += k;
    }
  }
};

std::optional<DominoTableau> raise_dom(int i, const DominoTableau& d, CoplacticTrace* trace) {
  std::vector<int> idx[2];
  for (int x = 0; x < int(d.dominoes.size()); ++x) {
    int e = d.dominoes[x].entry;
    if (e == i || e == i + 1) idx[e - i].push_back(x);
  }
  std::vector<int> p[2];
  for (int h = 0; h < 2; ++h) {
    std::sort(idx[h].begin(), idx[h].end(),
              [&](int a, int b) { return d.dominoes[a].pos() > d.dominoes[b].pos(); });
    for (int x : idx[h]) p[h].push_back(d.dominoes[x].pos());
  }
  int k = minimal_slack(p[0], p[1]);
  if (k == 0) return std::nullopt;
  Engine eng{i, d.dominoes, {}, {}, {}};
  for (int m = 0; m < int(idx[0].size()); ++m) eng.at[{0, k + m}] = idx[0][m];
  for (int m = 0; m < int(idx[1].size()); ++m) eng.at[{1, m}] = idx[1][m];
  eng.run(k - 1);
  DominoTableau out(d.shape, eng.ds);
  if (auto err = validate_ssdt(out)) throw std::logic_error("e_i produced an invalid tableau: " + err->message);
  if (trace) {
    trace->steps = eng.steps;
    trace->active.clear();
    std::sort(eng.touched.begin(), eng.touched.end());
    eng.touched.erase(std::unique(eng.touched.begin(), eng.touched.end()), eng.touched.end());
    for (int x : eng.touched) {
      trace->active.push_back(eng.ds[x].d.first());
      trace->active.push_back(eng.ds[x].d.second());
    }
    std::sort(trace->active.begin(), trace->active.end());
  }
  return out;
}

}  // namespace

std::optional<DominoTableau> coplactic_dom(Coplactic kind, int i, const DominoTableau& d,
                                           CoplacticTrace* trace) {
  if (i < 0) throw std::invalid_argument("negative coplactic index");
  if (trace) {
    trace->kind = kind;
    trace->index = i;
    trace->steps.clear();
    trace->active.clear();
  }
  if (kind == Coplactic::e) return raise_dom(i, d, trace);
  // f_i is e_{top-1-i} seen through a half-turn
  int top = std::max(max_entry(d), i + 1);
  int rows = int(d.shape.outer.length()), cols = d.shape.outer.row(0);
  auto r = raise_dom(top - 1 - i, rotate(d, rows, cols, top), nullptr);
  if (!r) return std::nullopt;
  DominoTableau out = rotate(*r, rows, cols, top);
  if (trace) {
    // record the e_i steps that this f_i reverses
    CoplacticTrace back;
    raise_dom(i, out, &back);
    trace->steps = back.steps;
    trace->active = back.active;
  }
  return out;
}

std::string format_trace(const CoplacticTrace& t, int entry_offset, int ordinate_offset) {
  int i = t.index + entry_offset;
  auto cell = [&](int row, int ord) {
    return std::to_string(i + row) + "_" + std::to_string(ord + ordinate_offset);
  };
  bool f = t.kind == Coplactic::f;
  std::vector<std::string> parts;
  std::string chain;
  auto flush = [&]() {
    if (!chain.empty()) parts.push_back(chain);
    chain.clear();
  };
  // replacements sharing a cell are written as one chain a<-b<-c
  int last_row = -1, last_ord = 0;
  std::vector<CoplacticStep> steps = t.steps;
  if (f) std::reverse(steps.begin(), steps.end());
  for (const auto& s : steps) {
    if (s.kind != CoplacticStep::Kind::replace) {
      flush();
      parts.push_back(s.kind == CoplacticStep::Kind::t0 ? "T0" : "T1(k=" + std::to_string(s.k) + ")");
      last_row = -1;
      continue;
    }
    Cell a{s.hole_row, s.hole_ord}, b{s.src_row, s.src_ord};
    if (f) std::swap(a, b);  // f moves the entry at the hole cell back out
    if (!chain.empty() && last_row == a.first && last_ord == a.second) {
      chain += (f ? "->" : "<-") + cell(b.first, b.second);
    } else {
      flush();
      chain = cell(a.first, a.second) + (f ? "->" : "<-") + cell(b.first, b.second);
    }
    last_row = b.first;
    last_ord = b.second;
  }
  flush();
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? ", " : "") << parts[k];
  return os.str();
}

Raising raise_to_yamanouchi(const DominoTableau& d) {
  Raising r{d, {}};
  int top = max_entry(d);
  for (;;) {
    bool moved = false;
    for (int i = 0; i < top && !moved; ++i) {
      if (auto e = coplactic_dom(Coplactic::e, i, r.yamanouchi)) {
        r.yamanouchi = *e;
        r.word.push_back(i);
        moved = true;
      }
    }
    if (!moved) return r;
  }
}

namespace {

std::vector<int> raise_young_word(YoungTableau& y) {
  std::vector<int> word;
  int top = 0;
  for (const auto& row : y.rows)
    for (int x : row) top = std::max(top, x);
  for (;;) {
    bool moved = false;
    for (int i = 0; i < top && !moved; ++i) {
      if (auto e = coplactic_young(Coplactic::e, i, y)) {
        y = *e;
        word.push_back(i);
        moved = true;
      }
    }
    if (!moved) return word;
  }
}

}  // namespace

std::pair<DominoTableau, YoungTableau> cl_split(const DominoTableau& d) {
  Raising r = raise_to_yamanouchi(d);
  YoungTableau p = canonical(Partition(trimmed(r.yamanouchi.weight())));
  for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) {
    auto f = coplactic_young(Coplactic::f, *it, p);
    if (!f) throw std::logic_error("coplactic graphs of D and P differ");
    p = *f;
  }
  return {r.yamanouchi, p};
}

DominoTableau cl_merge(const DominoTableau& y, const YoungTableau& p) {
  if (!is_yamanouchi_dom(y)) throw std::invalid_argument("cl_merge needs a Yamanouchi domino tableau");
  // P sits in the coplactic graph of Can(wt Y), so its shape is wt Y
  if (!p.shape.straight() || p.shape.outer.parts() != trimmed(y.weight()))
    throw std::invalid_argument("cl_merge needs a straight tableau whose shape is the weight of Y");
  YoungTableau q = p;
  std::vector<int> word = raise_young_word(q);
  DominoTableau d = y;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto f = coplactic_dom(Coplactic::f, *it, d);
    if (!f) throw std::invalid_argument("pair is not in the image of cl_split");
    d = *f;
  }
  return d;
}

}  // namespace dominotab
