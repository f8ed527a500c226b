#include "dominotab/dominoes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dominotab {

namespace {

bool standard_less(const PlacedDomino& a, const PlacedDomino& b) {
  if (a.entry != b.entry) return a.entry < b.entry;
  if (a.pos() != b.pos()) return a.pos() < b.pos();
  return a.d < b.d;
}

int parity(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

DominoTableau::DominoTableau(SkewShape s, std::vector<PlacedDomino> ds)
    : shape(std::move(s)), dominoes(std::move(ds)) {
  std::sort(dominoes.begin(), dominoes.end(), standard_less);
}

Weight DominoTableau::weight() const {
  Weight w;
  for (const auto& p : dominoes) {
    if (p.entry >= int(w.size())) w.resize(p.entry + 1, 0);
    ++w[p.entry];
  }
  return w;
}

int DominoTableau::find(Square s) const {
  for (std::size_t k = 0; k < dominoes.size(); ++k)
    if (dominoes[k].d.covers(s)) return int(k);
  return -1;
}

int max_entry(const DominoTableau& t) {
  int m = -1;
  for (const auto& p : t.dominoes) m = std::max(m, p.entry);
  return m;
}

std::string to_string(const DominoTableau& t) {
  std::ostringstream os;
  os << to_string(t.shape) << " {";
  for (std::size_t k = 0; k < t.dominoes.size(); ++k) {
    const auto& p = t.dominoes[k];
    os << (k ? " " : "") << (p.d.vertical() ? 'V' : 'H') << '(' << p.d.anchor.row << ','
       << p.d.anchor.col << "):" << p.entry;
  }
  os << '}';
  return os.str();
}

std::optional<ValidationError> validate_ssdt(const DominoTableau& t) {
  using K = ValidationError::Kind;
  std::vector<PlacedDomino> ds = t.dominoes;
  std::sort(ds.begin(), ds.end(), standard_less);
  auto where = [](const PlacedDomino& p) {
    std::ostringstream os;
    os << (p.d.vertical() ? "vertical" : "horizontal") << " domino at (" << p.d.anchor.row
       << "," << p.d.anchor.col << ")";
    return os.str();
  };
  std::map<Square, int> owner;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (ds[k].entry < 0) return ValidationError{K::outside, int(k), -1, "negative entry"};
    for (Square s : {ds[k].d.first(), ds[k].d.second()}) {
      if (!t.shape.contains(s))
        return ValidationError{K::outside, int(k), -1, where(ds[k]) + " leaves the shape"};
      auto [it, fresh] = owner.emplace(s, int(k));
      if (!fresh)
        return ValidationError{K::overlap, it->second, int(k),
                               where(ds[it->second]) + " overlaps " + where(ds[k])};
    }
  }
  if (int(owner.size()) != t.shape.size()) {
    for (Square s : t.shape.squares())
      if (!owner.count(s))
        return ValidationError{K::gap, -1, -1,
                               "square (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                                   ") is not covered"};
  }
  Partition cur = t.shape.inner;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (k > 0 && ds[k].entry == ds[k - 1].entry && ds[k].pos() == ds[k - 1].pos())
      return ValidationError{K::order, int(k - 1), int(k),
                             where(ds[k - 1]) + " and " + where(ds[k]) +
                                 " have equal entries and positions"};
    auto next = with_squares(cur, {ds[k].d.first(), ds[k].d.second()});
    if (!next) {
      // a square left of or above the domino that is still missing
      int blocker = -1;
      for (Square s : {ds[k].d.first(), ds[k].d.second()})
        for (Square n : {Square{s.row, s.col - 1}, Square{s.row - 1, s.col}}) {
          if (blocker >= 0 || !t.shape.contains(n) || ds[k].d.covers(n)) continue;
          if (n.col >= cur.row(n.row)) blocker = owner.at(n);
        }
      return ValidationError{K::order, int(k), blocker,
                             where(ds[k]) + " precedes " +
                                 (blocker >= 0 ? where(ds[blocker]) : std::string("its neighbours")) +
                                 " in the standardisation"};
    }
    cur = *next;
  }
  return std::nullopt;
}

bool locally_semistandard(const DominoTableau& t) {
  std::map<Square, int> entry;
  for (const auto& p : t.dominoes) {
    entry[p.d.first()] = p.entry;
    entry[p.d.second()] = p.entry;
  }
  for (const auto& p : t.dominoes)
    for (Square s : {p.d.first(), p.d.second()}) {
      auto r = entry.find({s.row, s.col + 1});
      if (r != entry.end() && !p.d.covers(r->first) && r->second < p.entry) return false;
      auto b = entry.find({s.row + 1, s.col});
      if (b != entry.end() && !p.d.covers(b->first) && b->second <= p.entry) return false;
    }
  return true;
}

int twospin(const DominoTableau& t) {
  int v = 0;
  for (const auto& p : t.dominoes) v += p.d.vertical();
  return v;
}

Word column_word(const DominoTableau& t) {
  std::vector<PlacedDomino> ds = t.dominoes;
  auto bottom = [](const PlacedDomino& p) { return p.d.anchor.row + (p.d.vertical() ? 1 : 0); };
  std::sort(ds.begin(), ds.end(), [&](const PlacedDomino& a, const PlacedDomino& b) {
    if (a.d.anchor.col != b.d.anchor.col) return a.d.anchor.col < b.d.anchor.col;
    return bottom(a) > bottom(b);
  });
  Word w;
  for (const auto& p : ds) w.push_back(p.entry);
  return w;
}

bool is_yamanouchi_dom(const DominoTableau& t) { return is_yamanouchi_word(column_word(t)); }

DominanceResult augment_dom(const DominoTableau& t, const SkewShape& target) {
  std::vector<int> entry, pos;
  for (const auto& p : t.dominoes) {
    entry.push_back(p.entry);
    pos.push_back(p.pos());
  }
  return augment_cells(entry, pos, target);
}

ValidOrder semitic_order(const SkewShape& target) {
  ValidOrder o;
  for (std::size_t i = 0; i < target.outer.length(); ++i)
    for (int j = target.outer.row(i) - 1; j >= target.inner.row(i); --j) o.emplace_back(int(i), j);
  return o;
}

ValidOrder kanji_order(const SkewShape& target) {
  ValidOrder o = semitic_order(target);
  std::sort(o.begin(), o.end(), [](auto a, auto b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return o;
}

namespace {

bool precedes(std::pair<int, int> a, std::pair<int, int> b) {
  return a != b && a.first <= b.first && a.second >= b.second;
}

}  // namespace

bool is_valid_order(const ValidOrder& order, const SkewShape& target) {
  ValidOrder cells = semitic_order(target), sorted = order;
  std::sort(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  if (cells != sorted) return false;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (precedes(order[b], order[a])) return false;
  return true;
}

void for_each_valid_order(const SkewShape& target,
                          const std::function<void(const ValidOrder&)>& f) {
  ValidOrder cells = semitic_order(target), cur;
  std::vector<bool> used(cells.size(), false);
  std::function<void()> rec = [&]() {
    if (cur.size() == cells.size()) {
      f(cur);
      return;
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
      if (used[a]) continue;
      bool minimal = true;
      for (std::size_t b = 0; b < cells.size() && minimal; ++b)
        if (!used[b] && precedes(cells[b], cells[a])) minimal = false;
      if (!minimal) continue;
      used[a] = true;
      cur.push_back(cells[a]);
      rec();
      cur.pop_back();
      used[a] = false;
    }
  };
  rec();
}

StandardChain specialise(const DominoTableau& t, const Augmentation& aug, const ValidOrder& order) {
  if (aug.ordinate.size() != t.dominoes.size())
    throw std::invalid_argument("augmentation does not match the tableau");
  std::map<std::pair<int, int>, int> carrier;
  for (std::size_t k = 0; k < t.dominoes.size(); ++k)
    carrier[{t.dominoes[k].entry, aug.ordinate[k]}] = int(k);
  if (order.size() != carrier.size())
    throw std::invalid_argument("order does not list the cells of the target");
  StandardChain chain{t.shape.inner};
  for (auto cell : order) {
    auto it = carrier.find(cell);
    if (it == carrier.end()) throw std::invalid_argument("order names a cell outside the target");
    const Domino& d = t.dominoes[it->second].d;
    auto next = with_squares(chain.back(), {d.first(), d.second()});
    if (!next)
      throw std::logic_error("specialisation is not a standard domino tableau at " +
                             std::to_string(cell.first) + "_" + std::to_string(cell.second));
    chain.push_back(*next);
  }
  return chain;
}

StandardChain standardisation(const DominoTableau& t) {
  StandardChain chain{t.shape.inner};
  std::vector<PlacedDomino> ds = t.dominoes;
  std::sort(ds.begin(), ds.end(), standard_less);
  for (const auto& p : ds) {
    auto next = with_squares(chain.back(), {p.d.first(), p.d.second()});
    if (!next) throw std::invalid_argument("not a semistandard domino tableau");
    chain.push_back(*next);
  }
  return chain;
}

bool is_domino_chain(const StandardChain& chain) {
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (!chain[k].contains(chain[k - 1])) return false;
    auto sq = difference(chain[k], chain[k - 1]);
    if (sq.size() != 2 || !domino_from(sq[0], sq[1])) return false;
  }
  return true;
}

DominoTableau from_chain(const StandardChain& chain, const std::vector<int>& entries) {
  if (chain.empty() || entries.size() + 1 != chain.size() || !is_domino_chain(chain))
    throw std::invalid_argument("from_chain needs a domino chain matching the entries");
  std::vector<PlacedDomino> ds;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    auto sq = difference(chain[k], chain[k - 1]);
    ds.push_back({*domino_from(sq[0], sq[1]), entries[k - 1]});
  }
  return DominoTableau(SkewShape(chain.back(), chain.front()), ds);
}

int core_index(const DominoTableau& t) { return two_quotient(t.shape.outer).core; }

DominoTableau cq2_tab(int c, const YoungTableau& t0, const YoungTableau& t1) {
  struct Item {
    int entry, pos;
  };
  std::vector<Item> items;
  for (Square s : t0.shape.squares()) items.push_back({t0.at(s), 2 * (content(s) + c)});
  for (Square s : t1.shape.squares()) items.push_back({t1.at(s), 2 * (content(s) - c) + 1});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.entry != b.entry ? a.entry < b.entry : a.pos < b.pos;
  });
  SkewShape shape = cq2_skew(c, t0.shape, t1.shape);
  Partition cur = shape.inner;
  std::vector<PlacedDomino> ds;
  for (const Item& it : items) {
    Domino d;
    auto next = add_domino(cur, it.pos, &d);
    if (!next) throw std::invalid_argument("cq2_tab needs semistandard tableaux");
    cur = *next;
    ds.push_back({d, it.entry});
  }
  if (cur != shape.outer) throw std::logic_error("cq2_tab did not fill its shape");
  return DominoTableau(shape, ds);
}

std::pair<YoungTableau, YoungTableau> cq2_tab_inv(int c, const DominoTableau& t) {
  if (core_index(t) != c)
    throw std::invalid_argument("shape " + to_string(t.shape) + " does not have 2-core index " +
                                std::to_string(c));
  TwoQuotient in = two_quotient(t.shape.inner), out = two_quotient(t.shape.outer);
  Partition q[2] = {in.q0, in.q1};
  std::map<Square, int> entries[2];
  for (const auto& p : t.dominoes) {
    int pos = p.pos(), comp = parity(pos);
    int u = comp == 0 ? pos / 2 - c : (pos - 1) / 2 + c;
    Square s;
    auto next = add_square(q[comp], u, &s);
    if (!next) throw std::invalid_argument("not a semistandard domino tableau");
    q[comp] = *next;
    entries[comp][s] = p.entry;
  }
  if (q[0] != out.q0 || q[1] != out.q1) throw std::logic_error("quotient mismatch in cq2_tab_inv");
  auto build = [&](const Partition& o, const Partition& i, const std::map<Square, int>& e) {
    SkewShape shape(o, i);
    std::vector<std::vector<int>> rows(o.length());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].resize(o.row(r) - i.row(r));
    YoungTableau y(shape, rows);
    for (auto [s, x] : e) y.at(s) = x;
    return y;
  };
  return {build(out.q0, in.q0, entries[0]), build(out.q1, in.q1, entries[1])};
}

namespace {

struct Addable {
  int pos;
  Domino d;
};

std::vector<Addable> addable_dominoes(const std::vector<int>& rho, const Partition& outer) {
  auto at = [&](int r) { return r < int(rho.size()) ? rho[r] : 0; };
  std::vector<Addable> out;
  for (int r = 0; r <= int(rho.size()); ++r) {
    int c = at(r);
    bool room_above = r == 0 || at(r - 1) >= c + 2;
    if (room_above && c + 2 <= outer.row(r)) {
      Domino d{{r, c}, Orientation::horizontal};
      out.push_back({domino_pos(d), d});
    }
    bool free_top = r == 0 || at(r - 1) > c;
    if (free_top && at(r + 1) == c && c + 1 <= outer.row(r + 1)) {
      Domino d{{r, c}, Orientation::vertical};
      out.push_back({domino_pos(d), d});
    }
  }
  std::sort(out.begin(), out.end(), [](const Addable& a, const Addable& b) { return a.pos < b.pos; });
  return out;
}

void place(std::vector<int>& rho, const Domino& d, int delta) {
  for (Square s : {d.first(), d.second()}) {
    if (s.row >= int(rho.size())) rho.resize(s.row + 1, 0);
    rho[s.row] += delta;
  }
  while (!rho.empty() && rho.back() == 0) rho.pop_back();
}

struct Enumerator {
  const SkewShape& shape;
  int entries;
  std::function<int(int)> size_of;  // -1 for unconstrained
  bool yam_only;
  std::vector<int> rho;
  int remaining;
  std::vector<PlacedDomino> placed;
  std::vector<std::vector<int>> layer_pos;  // positions per entry, increasing
  std::vector<DominoTableau> out;

  bool layer_ok(int k) const {
    // 0-dominance between layers k-1 and k
    if (k == 0) return true;
    const auto &up = layer_pos[k - 1], &low = layer_pos[k];
    if (low.size() > up.size()) return false;
    for (std::size_t j = 0; j < low.size(); ++j)
      if (!(low[low.size() - 1 - j] < up[up.size() - 1 - j])) return false;
    return true;
  }

  void layer(int k) {
    if (remaining == 0) {
      for (int q = k; q < entries; ++q)
        if (size_of(q) > 0) return;
      out.emplace_back(shape, placed);
      return;
    }
    if (k >= entries) return;
    layer_pos.emplace_back();
    strip(k, INT32_MIN, size_of(k));
    layer_pos.pop_back();
  }

  void strip(int k, int last_pos, int left) {
    if (left <= 0) {  // -1: any size, 0: layer complete
      if (!yam_only || layer_ok(k)) layer(k + 1);
      if (left == 0) return;
    }
    for (const Addable& a : addable_dominoes(rho, shape.outer)) {
      if (a.pos <= last_pos) continue;
      place(rho, a.d, +1);
      placed.push_back({a.d, k});
      layer_pos[k].push_back(a.pos);
      remaining -= 2;
      strip(k, a.pos, left < 0 ? -1 : left - 1);
      remaining += 2;
      layer_pos[k].pop_back();
      placed.pop_back();
      place(rho, a.d, -1);
    }
  }
};

std::vector<DominoTableau> run(const SkewShape& shape, int entries, std::function<int(int)> size_of,
                               bool yam_only) {
  if (shape.size() % 2 || !tileable_core(shape)) return {};
  Enumerator e{shape, entries, std::move(size_of), yam_only, shape.inner.parts(), shape.size(),
               {}, {}, {}};
  e.layer(0);
  return std::move(e.out);
}

}  // namespace

std::vector<DominoTableau> enumerate_ssdt(const SkewShape& shape, int n, bool yam_only) {
  return run(shape, n, [](int) { return -1; }, yam_only);
}

std::vector<DominoTableau> enumerate_ssdt_weight(const SkewShape& shape, const Weight& weight,
                                                 bool yam_only) {
  if (2 * std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) return {};
  return run(shape, int(weight.size()),
             [w = weight](int k) { return k < int(w.size()) ? w[k] : 0; }, yam_only);
}

std::vector<StandardChain> enumerate_standard_domino(const SkewShape& shape) {
  std::vector<StandardChain> out;
  for (const auto& t : enumerate_ssdt_weight(shape, Weight(shape.size() / 2, 1)))
    out.push_back(standardisation(t));
  return out;
}

DominoTableau rotate(const DominoTableau& t, int rows, int cols, int top) {
  std::vector<PlacedDomino> ds;
  for (const auto& p : t.dominoes) {
    auto d = domino_from(rotated(p.d.first(), rows, cols), rotated(p.d.second(), rows, cols));
    ds.push_back({*d, top - p.entry});
  }
  return DominoTableau(rotated(t.shape, rows, cols), ds);
}

}  // namespace dominotab
