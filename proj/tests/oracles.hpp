#pragma once
// Reference implementations used only by tests. They avoid the library's own
// machinery (beta sets, augmentations, enumerators) on purpose.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dominotab/shapes.hpp"

namespace oracle {

using dominotab::Domino;
using dominotab::Orientation;
using dominotab::Partition;
using dominotab::SkewShape;
using dominotab::Square;

inline void partitions_of(int n, int max_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_of(n, n, cur, out);
  return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions(k)) out.push_back(p);
  return out;
}

// All skew shapes nu/kappa with |nu| <= n (kappa may be empty).
inline std::vector<SkewShape> skew_shapes_up_to(int n) {
  std::vector<SkewShape> out;
  for (auto& nu : partitions_up_to(n))
    for (auto& ka : partitions_up_to(nu.size()))
      if (nu.contains(ka)) out.emplace_back(nu, ka);
  return out;
}

// Every domino tiling of a skew diagram, by backtracking on the first
// uncovered square in row-major order.
inline std::vector<std::vector<Domino>> tilings(const SkewShape& s) {
  std::vector<std::vector<Domino>> out;
  std::set<Square> free;
  for (Square q : s.squares()) free.insert(q);
  std::vector<Domino> cur;
  std::function<void()> rec = [&]() {
    if (free.empty()) {
      out.push_back(cur);
      return;
    }
    Square q = *free.begin();
    for (Square r : {Square{q.row, q.col + 1}, Square{q.row + 1, q.col}}) {
      if (!free.count(r)) continue;
      free.erase(q);
      free.erase(r);
      cur.push_back(Domino{q, r.row == q.row ? Orientation::horizontal : Orientation::vertical});
      rec();
      cur.pop_back();
      free.insert(q);
      free.insert(r);
    }
  };
  rec();
  return out;
}

// Abacus with an even number of beads: the even and odd runners give the two
// quotient partitions.
inline std::pair<Partition, Partition> abacus_quotient(const Partition& p) {
  int n = int(p.length()) + 2 + int(p.length() % 2);
  std::vector<int> runner[2];
  for (int i = 0; i < n; ++i) {
    int b = p.row(i) + n - 1 - i;
    runner[b % 2].push_back(b / 2);
  }
  auto part = [](std::vector<int> r) {
    std::sort(r.rbegin(), r.rend());
    std::vector<int> parts;
    int m = int(r.size());
    for (int k = 0; k < m; ++k) parts.push_back(r[k] - (m - 1 - k));
    return Partition(parts);
  };
  return {part(runner[0]), part(runner[1])};
}

// Semistandard fillings of a skew shape, square by square in row-major order.
inline void fill_sst(const SkewShape& s, int n,
                     const std::function<void(const std::map<Square, int>&)>& f) {
  std::vector<Square> sq = s.squares();
  std::map<Square, int> val;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == sq.size()) {
      f(val);
      return;
    }
    Square q = sq[k];
    int lo = 0;
    auto left = val.find({q.row, q.col - 1});
    if (left != val.end()) lo = std::max(lo, left->second);
    auto up = val.find({q.row - 1, q.col});
    if (up != val.end()) lo = std::max(lo, up->second + 1);
    for (int x = lo; x < n; ++x) {
      val[q] = x;
      rec(k + 1);
    }
    val.erase(q);
  };
  rec(0);
}

// Textbook Littlewood-Richardson count: fillings of nu/lambda with weight mu
// whose row reading (right to left, top to bottom) is a lattice word.
inline int lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!nu.contains(lambda) || nu.size() != lambda.size() + mu.size()) return 0;
  SkewShape s(nu, lambda);
  int count = 0;
  fill_sst(s, int(mu.length()), [&](const std::map<Square, int>& val) {
    std::vector<int> seen(mu.length() + 1, 0);
    std::vector<Square> sq = s.squares();
    std::sort(sq.begin(), sq.end(), [](Square a, Square b) {
      return a.row != b.row ? a.row < b.row : a.col > b.col;
    });
    for (Square q : sq) {
      int x = val.at(q);
      ++seen[x];
      if (x > 0 && seen[x] > seen[x - 1]) return;
    }
    for (std::size_t i = 0; i < mu.length(); ++i)
      if (seen[i] != mu.row(i)) return;
    ++count;
  });
  return count;
}

// Bracket rule on a word read left to right: i+1 opens, i closes.
// Returns the index of the letter changed by e_i (or f_i), if any.
inline std::optional<std::size_t> signature_e(const std::vector<int>& w, int i) {
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1)
      open.push_back(k);
    else if (w[k] == i && !open.empty())
      open.pop_back();
  }
  if (open.empty()) return std::nullopt;
  // leftmost unmatched i+1: unmatched opens never get closed later, and any
  // unmatched open lies right of every unmatched close.
  return open.front();
}

inline std::optional<std::size_t> signature_f(const std::vector<int>& w, int i) {
  std::vector<std::size_t> open, unmatched_close;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1)
      open.push_back(k);
    else if (w[k] == i) {
      if (!open.empty())
        open.pop_back();
      else
        unmatched_close.push_back(k);
    }
  }
  if (unmatched_close.empty()) return std::nullopt;
  return unmatched_close.back();
}

// Every chain from inner to outer adding one square at a time.
inline std::vector<std::vector<Partition>> square_chains(const Partition& inner, const Partition& outer) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur{inner};
  std::function<void()> rec = [&]() {
    const Partition& p = cur.back();
    if (p == outer) {
      out.push_back(cur);
      return;
    }
    std::vector<int> parts = p.parts();
    parts.push_back(0);
    for (std::size_t r = 0; r < parts.size(); ++r) {
      if (parts[r] >= outer.row(r)) continue;
      if (r > 0 && parts[r - 1] == parts[r]) continue;
      std::vector<int> next = parts;
      ++next[r];
      cur.emplace_back(next);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace oracle
