#include "dominotab/switching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dominotab {

Partition switch_corner(const Partition& a, const Partition& b, const Partition& d) {
  auto sq = difference(d, a);
  if (sq.size() != 2 || !b.contains(a) || !d.contains(b))
    throw std::invalid_argument("not a unit square of a switching family");
  if (adjacent(sq[0], sq[1])) return b;
  for (Square s : sq) {
    auto c = with_squares(a, {s});
    if (c && *c != b) return *c;
  }
  return b;
}

std::pair<StandardChain, StandardChain> switch_standard(const StandardChain& s, const StandardChain& t,
                                                        SwitchingFamily* family) {
  if (s.empty() || t.empty() || s.back() != t.front())
    throw std::invalid_argument("switch_standard needs S ending where T starts");
  if (!is_square_chain(s) || !is_square_chain(t))
    throw std::invalid_argument("switch_standard needs single-square chains");
  std::size_t m = s.size() - 1, n = t.size() - 1;
  // row p of the family, filled from the bottom row (p = m, which is T) upwards
  std::vector<Partition> row = t;
  StandardChain s_new(m + 1);
  s_new[m] = t.back();
  if (family) family->grid.assign(m + 1, {});
  if (family) family->grid[m] = row;
  for (std::size_t p = m; p-- > 0;) {
    std::vector<Partition> up(n + 1);
    up[0] = s[p];
    for (std::size_t q = 1; q <= n; ++q) up[q] = switch_corner(up[q - 1], row[q - 1], row[q]);
    s_new[p] = up[n];
    row = std::move(up);
    if (family) family->grid[p] = row;
  }
  return {row, s_new};
}

std::pair<YoungTableau, YoungTableau> switch_pair(const YoungTableau& u, const YoungTableau& v) {
  if (u.shape.outer != v.shape.inner) throw std::invalid_argument("switch_pair needs outer(U) = inner(V)");
  auto [t2, s2] = switch_standard(standardise(u), standardise(v));
  return {destandardise(t2, standard_entries(v)), destandardise(s2, standard_entries(u))};
}

bool is_self_switching(const StandardChain& s, const StandardChain& t) {
  if (s.empty() || t.empty() || s.back() != t.front()) return false;
  auto [t2, s2] = switch_standard(s, t);
  return t2 == s && s2 == t;
}

bool is_self_switching(const YoungTableau& u, const YoungTableau& v) {
  if (u.shape.outer != v.shape.inner) return false;
  if (trimmed(u.weight()) != trimmed(v.weight())) return false;
  return is_self_switching(standardise(u), standardise(v));
}

std::pair<StandardChain, StandardChain> pi0(const StandardChain& d, SwitchingFamily* family) {
  if (d.empty() || !is_domino_chain(d)) throw std::invalid_argument("pi0 needs a domino chain");
  std::size_t n = d.size() - 1;
  std::vector<std::vector<Partition>> g(n + 1, std::vector<Partition>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) g[i][i] = d[i];
  for (std::size_t i = 0; i < n; ++i) {
    // the only partition strictly between the ends of a domino
    auto sq = difference(d[i + 1], d[i]);
    auto mid = with_squares(d[i], {sq[0]});
    if (!mid) mid = with_squares(d[i], {sq[1]});
    g[i][i + 1] = g[i + 1][i] = *mid;
  }
  for (std::size_t gap = 2; gap <= n; ++gap)
    for (std::size_t i = 0; i + gap <= n; ++i) {
      std::size_t j = i + gap;
      g[i][j] = switch_corner(g[i][j - 1], g[i + 1][j - 1], g[i + 1][j]);
      g[j][i] = g[i][j];
    }
  StandardChain s(n + 1), t(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    s[k] = g[k][0];
    t[k] = g[n][k];
  }
  if (family) family->grid = std::move(g);
  return {s, t};
}

StandardChain pi0_inv(const StandardChain& s, const StandardChain& t) {
  if (s.size() != t.size()) throw std::invalid_argument("pi0_inv needs chains of equal length");
  SwitchingFamily fam;
  auto [t2, s2] = switch_standard(s, t, &fam);
  if (t2 != s || s2 != t) throw std::invalid_argument("pair is not self-switching");
  StandardChain d;
  for (std::size_t i = 0; i < s.size(); ++i) d.push_back(fam.grid[i][i]);
  if (!is_domino_chain(d)) throw std::logic_error("diagonal of a symmetric family is not a domino chain");
  return d;
}

std::pair<YoungTableau, YoungTableau> pi1(const DominoTableau& d, SwitchingFamily* family) {
  auto [s, t] = pi0(standardisation(d), family);
  std::vector<int> entries;
  for (const auto& p : d.dominoes) entries.push_back(p.entry);
  YoungTableau u = destandardise(s, entries), v = destandardise(t, entries);
  if (!is_semistandard(u) || !is_semistandard(v))
    throw std::logic_error("pi1 produced a non-semistandard tableau");
  return {u, v};
}

std::pair<YoungTableau, YoungTableau> pi1_shuffle(const DominoTableau& d) {
  struct Item {
    bool red;
    int entry;
    Square sq;
  };
  // dominoes are stored in standard order; each contributes its blue copy
  // (inward square) followed by its red copy (outward square)
  std::vector<Item> shuffle;
  for (const auto& p : d.dominoes) {
    shuffle.push_back({false, p.entry, inward_square(p.d)});
    shuffle.push_back({true, p.entry, outward_square(p.d)});
  }
  // move the reds to the end, the rightmost first; a transposition swaps the
  // squares of the two entries when they are adjacent
  for (std::size_t k = shuffle.size(); k-- > 0;) {
    if (!shuffle[k].red) continue;
    for (std::size_t p = k; p + 1 < shuffle.size() && !shuffle[p + 1].red; ++p) {
      if (adjacent(shuffle[p].sq, shuffle[p + 1].sq)) std::swap(shuffle[p].sq, shuffle[p + 1].sq);
      std::swap(shuffle[p], shuffle[p + 1]);
    }
  }
  std::map<Square, int> blue, red;
  for (const auto& it : shuffle) (it.red ? red : blue)[it.sq] = it.entry;
  auto build = [](const std::map<Square, int>& cells, const Partition& inner) {
    std::vector<Square> all;
    for (auto& [s, x] : cells) all.push_back(s);
    auto outer = with_squares(inner, all);
    if (!outer) throw std::logic_error("shuffle did not produce a skew shape");
    SkewShape shape(*outer, inner);
    std::vector<std::vector<int>> rows(outer->length());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].resize(outer->row(r) - inner.row(r));
    YoungTableau y(shape, rows);
    for (auto& [s, x] : cells) y.at(s) = x;
    return y;
  };
  YoungTableau u = build(blue, d.shape.inner);
  YoungTableau v = build(red, u.shape.outer);
  return {u, v};
}

DominoTableau pi1_inv(const YoungTableau& u, const YoungTableau& v) {
  if (!is_self_switching(u, v)) throw std::invalid_argument("pair is not self-switching");
  StandardChain d = pi0_inv(standardise(u), standardise(v));
  DominoTableau res = from_chain(d, standard_entries(u));
  if (auto err = validate_ssdt(res)) throw std::logic_error("pi1_inv produced an invalid tableau: " + err->message);
  return res;
}

YoungTableau pi(const DominoTableau& d) { return rectify(pi1(d).first); }

std::pair<Concatenation, Concatenation> pi2(const std::vector<DominoTableau>& parts) {
  std::size_t k = parts.size();
  if (k == 0) return {};
  for (std::size_t a = 1; a < k; ++a)
    if (parts[a - 1].shape.outer != parts[a].shape.inner)
      throw std::invalid_argument("pi2 needs consecutive shapes to match");
  // u[i][j], v[i][j] for i <= j
  std::vector<std::vector<YoungTableau>> u(k, std::vector<YoungTableau>(k)), v = u;
  for (std::size_t i = 0; i < k; ++i) std::tie(u[i][i], v[i][i]) = pi1(parts[i]);
  for (std::size_t gap = 1; gap < k; ++gap)
    for (std::size_t i = 0; i + gap < k; ++i) {
      std::size_t j = i + gap;
      std::tie(u[i][j], v[i][j]) = switch_pair(v[i][j - 1], u[i + 1][j]);
    }
  Concatenation first, second;
  for (std::size_t j = 0; j < k; ++j) first.push_back(u[0][j]);
  for (std::size_t i = 0; i < k; ++i) second.push_back(v[i][k - 1]);
  return {first, second};
}

StandardChain specialise(const YoungTableau& t, const Augmentation& aug, const ValidOrder& order) {
  std::vector<Square> sq = t.shape.squares();
  if (aug.ordinate.size() != sq.size()) throw std::invalid_argument("augmentation does not match the tableau");
  std::map<std::pair<int, int>, Square> carrier;
  for (std::size_t k = 0; k < sq.size(); ++k) carrier[{t.at(sq[k]), aug.ordinate[k]}] = sq[k];
  if (order.size() != carrier.size()) throw std::invalid_argument("order does not list the cells of the target");
  StandardChain chain{t.shape.inner};
  for (auto cell : order) {
    auto it = carrier.find(cell);
    if (it == carrier.end()) throw std::invalid_argument("order names a cell outside the target");
    auto next = with_squares(chain.back(), {it->second});
    if (!next) throw std::logic_error("specialisation is not a standard tableau");
    chain.push_back(*next);
  }
  return chain;
}

}  // namespace dominotab
