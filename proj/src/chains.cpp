#include "dominotab/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace dominotab {

namespace {

int parity(int x) { return ((x % 2) + 2) % 2; }

bool in_diagram(const Partition& p, Square s) { return s.row >= 0 && s.col >= 0 && s.col < p.row(s.row); }

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// (component, quotient square) of every domino, aligned with d.dominoes
std::vector<std::pair<int, Square>> quotient_cells(int c, const DominoTableau& d) {
  TwoQuotient in = two_quotient(d.shape.inner);
  Partition q[2] = {in.q0, in.q1};
  std::vector<std::pair<int, Square>> out;
  for (const auto& p : d.dominoes) {
    int pos = p.pos(), comp = parity(pos);
    int u = comp == 0 ? pos / 2 - c : (pos - 1) / 2 + c;
    Square s;
    auto next = add_square(q[comp], u, &s);
    if (!next) throw std::invalid_argument("not a semistandard domino tableau");
    q[comp] = *next;
    out.emplace_back(comp, s);
  }
  return out;
}

std::set<Square> squares_of(const std::vector<PlacedDomino>& ds) {
  std::set<Square> s;
  for (const auto& p : ds) {
    s.insert(p.d.first());
    s.insert(p.d.second());
  }
  return s;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

bool shares_square(const Domino& a, const Domino& b) {
  return a.covers(b.first()) || a.covers(b.second());
}

}  // namespace

DominoTableau s_reflect_tab(int r, const DominoTableau& d) {
  if (r != 0 && r != 1) throw std::invalid_argument("reflection index must be 0 or 1");
  int c = core_index(d);
  auto [t0, t1] = cq2_tab_inv(c, d);
  return cq2_tab(core_reflect(r, c), t1, t0);
}

Square fixed_square(const Domino& d, int r) {
  return parity(content(d.first())) == parity(r + 1) ? d.first() : d.second();
}

ChainSet chains(int r, const DominoTableau& d) {
  DominoTableau e = s_reflect_tab(r, d);
  int c = core_index(d);
  auto qa = quotient_cells(c, d), qb = quotient_cells(core_reflect(r, c), e);
  std::map<std::pair<int, Square>, int> in_e;
  for (int k = 0; k < int(qb.size()); ++k) in_e[qb[k]] = k;
  std::set<PlacedDomino> da(d.dominoes.begin(), d.dominoes.end()), db(e.dominoes.begin(), e.dominoes.end());
  ChainSet out;
  // moving dominoes of d, and the dominoes of e that are not already in d
  std::vector<int> from, to;
  for (int k = 0; k < int(d.dominoes.size()); ++k) {
    if (db.count(d.dominoes[k]))
      out.residual.push_back(d.dominoes[k]);
    else
      from.push_back(k);
  }
  for (int k = 0; k < int(e.dominoes.size()); ++k)
    if (!da.count(e.dominoes[k])) to.push_back(k);
  int m = int(from.size());
  UnionFind uf(m + int(to.size()));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < int(to.size()); ++b)
      if (shares_square(d.dominoes[from[a]].d, e.dominoes[to[b]].d)) uf.join(a, m + b);
  std::map<int, Chain> by_root;
  for (int a = 0; a < m; ++a) {
    Chain& ch = by_root[uf.find(a)];
    const PlacedDomino& x = d.dominoes[from[a]];
    // the domino of e carrying the same quotient square
    const PlacedDomino& y = e.dominoes[in_e.at({1 - qa[from[a]].first, qa[from[a]].second})];
    ch.r = r;
    ch.dominoes.push_back(x);
    for (Square s : {x.d.first(), x.d.second()})
      if (y.d.covers(s)) ch.pivots.push_back(s);
  }
  for (int b = 0; b < int(to.size()); ++b) by_root[uf.find(m + b)].replacement.push_back(e.dominoes[to[b]]);
  for (auto& [root, ch] : by_root) {
    std::sort(ch.dominoes.begin(), ch.dominoes.end());
    std::sort(ch.replacement.begin(), ch.replacement.end());
    std::sort(ch.pivots.begin(), ch.pivots.end());
    auto before = squares_of(ch.dominoes), after = squares_of(ch.replacement);
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(ch.removed));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(ch.added));
    ch.kind = ch.removed.empty() && ch.added.empty() ? ChainKind::closed : ChainKind::open;
    out.chains.push_back(std::move(ch));
  }
  std::sort(out.chains.begin(), out.chains.end(),
            [](const Chain& a, const Chain& b) { return a.dominoes < b.dominoes; });
  return out;
}

namespace {

std::set<Square> diagram(const Partition& p) {
  std::set<Square> out;
  for (std::size_t r = 0; r < p.length(); ++r)
    for (int c = 0; c < p.row(r); ++c) out.insert({int(r), c});
  return out;
}

std::optional<Partition> toggled(const Partition& p, const std::set<Square>& flip) {
  std::set<Square> sq = diagram(p);
  for (Square s : flip)
    if (!sq.erase(s)) sq.insert(s);
  std::vector<int> rows;
  for (Square s : sq) {
    if (s.row >= int(rows.size())) rows.resize(s.row + 1, 0);
    ++rows[s.row];
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    if ((r > 0 && rows[r] > rows[r - 1]) || rows[r] == 0) return std::nullopt;
  Partition out(rows);
  if (diagram(out) != sq) return std::nullopt;
  return out;
}

std::set<Square> sym_diff(const Partition& a, const Partition& b) {
  auto x = diagram(a), y = diagram(b);
  std::set<Square> out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

// Shape after moving the chosen chains. Boundary squares toggled by s_r in
// both the inner and the outer shape carry no domino and do not change the
// diagram; they are toggled only when asked (all chains moved, or moc).
DominoTableau moved(const DominoTableau& d, int r, const ChainSet& all, const std::vector<Chain>& subset,
                    bool inert) {
  SkewShape target = s_reflect_tab(r, d).shape;
  std::set<Square> flip_out, flip_in;
  std::set<PlacedDomino> gone;
  std::vector<PlacedDomino> ds;
  for (const Chain& c : subset) {
    gone.insert(c.dominoes.begin(), c.dominoes.end());
    ds.insert(ds.end(), c.replacement.begin(), c.replacement.end());
    for (Square s : c.removed) (in_diagram(target.outer, s) ? flip_in : flip_out).insert(s);
    for (Square s : c.added) (in_diagram(d.shape.outer, s) ? flip_in : flip_out).insert(s);
  }
  if (inert) {
    std::set<Square> claimed;
    for (const Chain& c : all.chains) {
      claimed.insert(c.removed.begin(), c.removed.end());
      claimed.insert(c.added.begin(), c.added.end());
    }
    auto dout = sym_diff(d.shape.outer, target.outer), din = sym_diff(d.shape.inner, target.inner);
    for (Square s : dout)
      if (!claimed.count(s)) {
        if (!din.count(s)) throw std::logic_error("unclaimed outer square in chain move");
        flip_out.insert(s);
        flip_in.insert(s);
      }
    for (Square s : din)
      if (!claimed.count(s) && !dout.count(s)) throw std::logic_error("unclaimed inner square in chain move");
  }
  for (const auto& p : d.dominoes)
    if (!gone.count(p)) ds.push_back(p);
  auto outer = toggled(d.shape.outer, flip_out), inner = toggled(d.shape.inner, flip_in);
  if (!outer || !inner || !outer->contains(*inner)) throw std::logic_error("moving chains broke the shape");
  DominoTableau res(SkewShape(*outer, *inner), ds);
  if (auto err = validate_ssdt(res)) throw std::logic_error("moving chains gave an invalid tableau: " + err->message);
  return res;
}

bool covers_all(const ChainSet& all, const std::vector<Chain>& subset) {
  for (const Chain& c : all.chains)
    if (std::find(subset.begin(), subset.end(), c) == subset.end()) return false;
  return true;
}

}  // namespace

DominoTableau move_chains(const DominoTableau& d, int r, const std::vector<Chain>& subset) {
  if (subset.empty()) return d;
  ChainSet all = chains(r, d);
  for (const Chain& c : subset)
    if (std::find(all.chains.begin(), all.chains.end(), c) == all.chains.end())
      throw std::invalid_argument("chain is not a chain of the tableau for this reflection");
  return moved(d, r, all, subset, covers_all(all, subset));
}

DominoTableau moc(int r, const DominoTableau& d) {
  ChainSet all = chains(r, d);
  std::vector<Chain> open;
  for (auto& c : all.chains)
    if (c.kind == ChainKind::open) open.push_back(c);
  return moved(d, r, all, open, true);
}

std::vector<std::pair<int, int>> blocked_pairs(const DominoTableau& d, const Augmentation& aug, int r) {
  if (aug.ordinate.size() != d.dominoes.size()) throw std::invalid_argument("augmentation does not match");
  std::vector<std::pair<int, int>> out;
  int n = int(d.dominoes.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (content(fixed_square(d.dominoes[a].d, r)) != content(fixed_square(d.dominoes[b].d, r))) continue;
      int di = d.dominoes[a].entry - d.dominoes[b].entry, dj = aug.ordinate[a] - aug.ordinate[b];
      if (di * di + dj * dj == 1) out.emplace_back(a, b);
    }
  return out;
}

bool is_unblocked(const Chain& c, const DominoTableau& d, const Augmentation& aug) {
  std::set<PlacedDomino> in_pair;
  for (auto [a, b] : blocked_pairs(d, aug, c.r)) {
    in_pair.insert(d.dominoes[a]);
    in_pair.insert(d.dominoes[b]);
  }
  for (const auto& p : c.dominoes)
    if (in_pair.count(p)) return false;
  return true;
}

int segregated_threshold(const SkewShape& chi, const SkewShape& chi1) {
  return chi.outer.row(0) + int(chi1.outer.length());
}

bool is_segregated(int c, const SkewShape& chi, const SkewShape& chi1, bool primed) {
  int n = segregated_threshold(chi, chi1);
  return primed ? 2 * c >= n : 2 * c <= -n + 1;
}

int orbit_slot(int c, bool primed) { return primed ? 1 - 2 * c : 2 * c; }

namespace {

// reflection exchanging slots k and k+1
int edge(int k) { return k % 2 != 0 ? 0 : 1; }

struct Walk {
  int slot;
  DominoTableau d;

  void to(int target) {
    while (slot < target) d = moc(edge(slot++), d);
    while (slot > target) d = moc(edge(--slot), d);
  }
};

Walk start(const YoungTableau& t0, const YoungTableau& t1, std::optional<int> start_c) {
  int n = segregated_threshold(t0.shape, t1.shape);
  int c0 = start_c ? *start_c : floor_div(1 - n, 2);
  if (!is_segregated(c0, t0.shape, t1.shape, false))
    throw std::invalid_argument("the starting tableau is not segregated");
  return {orbit_slot(c0, false), cq2_tab(c0, t0, t1)};
}

}  // namespace

DominoTableau phi(int c, const YoungTableau& t0, const YoungTableau& t1, bool primed, std::optional<int> start_c) {
  Walk w = start(t0, t1, start_c);
  w.to(orbit_slot(c, primed));
  return w.d;
}

std::pair<YoungTableau, YoungTableau> x_dom(const YoungTableau& t0, const YoungTableau& t1,
                                            std::optional<int> start_c) {
  Walk w = start(t0, t1, start_c);
  // the first even slot 2c where Sigma'_c of the swapped pair is segregated
  int n1 = segregated_threshold(t1.shape, t0.shape);
  int target = std::max(w.slot, n1);
  if (target % 2 != 0) ++target;
  w.to(target);
  auto [b, a] = cq2_tab_inv(target / 2, w.d);
  return {a, b};
}

DominoTableau yamyam_fwd(const DominoTableau& l, const SkewShape& psi) {
  auto res = augment_dom(l, psi);
  if (!dominant(res)) throw std::invalid_argument("L is not dominant for the target");
  const auto& aug = std::get<Augmentation>(res);
  std::vector<PlacedDomino> ds;
  for (std::size_t k = 0; k < l.dominoes.size(); ++k) {
    const Domino& d = l.dominoes[k].d;
    int i = l.dominoes[k].entry, j = aug.ordinate[k];
    int top = d.first().row;
    if (d.vertical()) {
      ds.push_back({{{2 * i, 2 * j}, Orientation::horizontal}, top});
      ds.push_back({{{2 * i + 1, 2 * j}, Orientation::horizontal}, top + 1});
    } else {
      ds.push_back({{{2 * i, 2 * j}, Orientation::vertical}, top});
      ds.push_back({{{2 * i, 2 * j + 1}, Orientation::vertical}, top});
    }
  }
  return DominoTableau(dublpart(psi), ds);
}

DominoTableau yamyam_bwd(const DominoTableau& m, const SkewShape& chi) {
  auto res = augment_dom(m, chi);
  if (!dominant(res)) throw std::invalid_argument("M is not dominant for the shape of L");
  const auto& aug = std::get<Augmentation>(res);
  std::map<Square, std::vector<int>> blocks;
  for (std::size_t k = 0; k < m.dominoes.size(); ++k) {
    Square a = m.dominoes[k].d.anchor;
    blocks[{a.row / 2, a.col / 2}].push_back(int(k));
  }
  std::vector<PlacedDomino> ds;
  std::vector<int> outer_rows, inner_rows;
  for (auto& [blk, ks] : blocks) {
    if (ks.size() != 2) throw std::invalid_argument("M is not made of 2x2 blocks");
    const PlacedDomino &x = m.dominoes[ks[0]], &y = m.dominoes[ks[1]];
    int ox = aug.ordinate[ks[0]], oy = aug.ordinate[ks[1]];
    if (x.d.vertical() != y.d.vertical()) throw std::invalid_argument("mixed block in M");
    if (!x.d.vertical()) {
      // stacked horizontals: a vertical domino of L
      const PlacedDomino& t = x.d.anchor.row < y.d.anchor.row ? x : y;
      const PlacedDomino& b = x.d.anchor.row < y.d.anchor.row ? y : x;
      if (b.entry != t.entry + 1 || ox != oy) throw std::invalid_argument("block does not come from a domino");
      ds.push_back({{{t.entry, ox}, Orientation::vertical}, blk.row});
    } else {
      int lo = std::min(ox, oy);
      if (x.entry != y.entry || std::abs(ox - oy) != 1) throw std::invalid_argument("block does not come from a domino");
      ds.push_back({{{x.entry, lo}, Orientation::horizontal}, blk.row});
    }
  }
  DominoTableau l(chi, ds);
  if (auto err = validate_ssdt(l)) throw std::invalid_argument("blocks of M do not form a tableau: " + err->message);
  // psi is read off the shape of M
  auto half = [](const Partition& p) {
    std::vector<int> parts;
    for (std::size_t r = 0; r < p.length(); r += 2) parts.push_back(p.row(r) / 2);
    return Partition(parts);
  };
  SkewShape psi(half(m.shape.outer), half(m.shape.inner));
  if (dublpart(psi) != m.shape || yamyam_fwd(l, psi) != m)
    throw std::invalid_argument("M is not in the image of the doubling construction");
  return l;
}

}  // namespace dominotab
