#include "dominotab/shapes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dominotab {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1]))
      throw std::invalid_argument("not a partition: " + to_string(*this));
  }
}

int Partition::size() const {
  int s = 0;
  for (int x : parts_) s += x;
  return s;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t k = 0; k < other.length(); ++k)
    if (other.parts_[k] > parts_[k]) return false;
  return true;
}

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
  for (int x : parts_)
    for (int c = 0; c < x; ++c) ++t[c];
  return Partition(std::move(t));
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.length(); ++k) os << (k ? "," : "") << p.row(k);
  os << ')';
  return os.str();
}

Weight trimmed(Weight w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
  return w;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("inner shape not contained in outer: " +
                                to_string(outer) + "/" + to_string(inner));
}

bool SkewShape::contains(Square s) const {
  if (s.row < 0 || s.col < 0) return false;
  return s.col < outer.row(s.row) && s.col >= inner.row(s.row);
}

std::vector<Square> SkewShape::squares() const {
  std::vector<Square> out;
  for (std::size_t r = 0; r < outer.length(); ++r)
    for (int c = inner.row(r); c < outer.row(r); ++c) out.push_back({int(r), c});
  return out;
}

std::string to_string(const SkewShape& s) {
  return to_string(s.outer) + "/" + to_string(s.inner);
}

SkewShape rotated(const SkewShape& s, int rows, int cols) {
  std::vector<int> outer(rows), inner(rows);
  for (int r = 0; r < rows; ++r) {
    outer[r] = cols - s.inner.row(rows - 1 - r);
    inner[r] = cols - s.outer.row(rows - 1 - r);
  }
  return SkewShape(Partition(outer), Partition(inner));
}

bool is_skew_diagram(const std::vector<Square>& squares) {
  std::set<Square> in(squares.begin(), squares.end());
  for (Square a : squares)
    for (Square b : squares) {
      if (a.row > b.row || a.col > b.col) continue;
      for (int r = a.row; r <= b.row; ++r)
        for (int c = a.col; c <= b.col; ++c)
          if (!in.count({r, c})) return false;
    }
  return true;
}

int domino_pos(const Domino& d) {
  return std::max(content(d.first()), content(d.second()));
}

std::optional<Domino> domino_from(Square a, Square b) {
  if (b < a) std::swap(a, b);
  if (a.row == b.row && b.col == a.col + 1) return Domino{a, Orientation::horizontal};
  if (a.col == b.col && b.row == a.row + 1) return Domino{a, Orientation::vertical};
  return std::nullopt;
}

Partition core_gamma(int c) {
  int k = c >= 1 ? 2 * c - 1 : -2 * c;
  std::vector<int> parts;
  for (int x = k; x >= 1; --x) parts.push_back(x);
  return Partition(std::move(parts));
}

int core_reflect(int r, int c) {
  if (r == 0) return 1 - c;
  if (r == 1) return -c;
  throw std::invalid_argument("reflection index must be 0 or 1");
}

namespace {

// Beta set in finite form: every integer below lo is a member, and the members
// at or above lo are listed. For a partition with n rows (padded by zeros) the
// members are p_i - i - 1 and lo = -n.
struct Beta {
  int lo = 0;
  std::vector<int> members;
};

Beta beta_of(const Partition& p, int n) {
  Beta b{-n, {}};
  for (int i = 0; i < n; ++i) b.members.push_back(p.row(i) - i - 1);
  return b;
}

int charge(const Beta& b) { return int(b.members.size()) + b.lo; }

Beta shifted(Beta b, int t) {
  b.lo += t;
  for (int& x : b.members) x += t;
  return b;
}

bool member(const Beta& b, int x) {
  return x < b.lo || std::find(b.members.begin(), b.members.end(), x) != b.members.end();
}

Partition partition_of(Beta b) {
  if (charge(b) != 0) throw std::logic_error("beta set of nonzero charge");
  std::sort(b.members.rbegin(), b.members.rend());
  std::vector<int> parts;
  for (std::size_t i = 0; i < b.members.size(); ++i) parts.push_back(b.members[i] + int(i) + 1);
  return Partition(std::move(parts));
}

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

TwoQuotient two_quotient(const Partition& p) {
  int n = int(p.length()) + int(p.length() % 2);
  Beta b = beta_of(p, n);
  Beta e0{-n / 2, {}}, e1{-n / 2, {}};
  for (int x : b.members) {
    if (x % 2 == 0)
      e0.members.push_back(x / 2);
    else
      e1.members.push_back(floor_half(x - 1));
  }
  int c = charge(e0);
  return {c, partition_of(shifted(e0, -c)), partition_of(shifted(e1, c))};
}

Partition cq2_shape(int c, const Partition& q0, const Partition& q1) {
  int big = int(q0.length() + q1.length()) + std::abs(c) + 2;
  Beta f0 = beta_of(q0, big + c), f1 = beta_of(q1, big - c);
  Beta b{-2 * big, {}};
  for (int m : f0.members) b.members.push_back(2 * (m + c));
  for (int m : f1.members) b.members.push_back(2 * (m - c) + 1);
  return partition_of(b);
}

SkewShape cq2_skew(int c, const SkewShape& chi0, const SkewShape& chi1) {
  return SkewShape(cq2_shape(c, chi0.outer, chi1.outer), cq2_shape(c, chi0.inner, chi1.inner));
}

Partition dublpart(const Partition& mu) {
  std::vector<int> parts;
  for (int x : mu.parts()) {
    parts.push_back(2 * x);
    parts.push_back(2 * x);
  }
  return Partition(std::move(parts));
}

SkewShape dublpart(const SkewShape& psi) {
  return SkewShape(dublpart(psi.outer), dublpart(psi.inner));
}

Partition strip_core(const Partition& p) {
  std::vector<int> rows = p.parts();
  auto at = [&](std::size_t r) { return r < rows.size() ? rows[r] : 0; };
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < rows.size() && !progress; ++r) {
      if (rows[r] >= 2 && at(r + 1) <= rows[r] - 2) {
        rows[r] -= 2;
        progress = true;
      } else if (r + 1 < rows.size() && rows[r] == rows[r + 1] && at(r + 2) < rows[r]) {
        --rows[r];
        --rows[r + 1];
        progress = true;
      }
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
  }
  return Partition(rows);
}

std::optional<int> tileable_core(const SkewShape& s) {
  TwoQuotient out = two_quotient(s.outer), in = two_quotient(s.inner);
  if (out.core != in.core || !out.q0.contains(in.q0) || !out.q1.contains(in.q1))
    return std::nullopt;
  return out.core;
}

std::optional<int> epsilon2(const SkewShape& s) {
  auto c = tileable_core(s);
  if (!c) return std::nullopt;
  TwoQuotient out = two_quotient(s.outer), in = two_quotient(s.inner);
  // One tiling suffices: add the quotient squares one at a time.
  Partition cur = s.inner;
  int vertical = 0;
  auto lay = [&](const Partition& big, const Partition& small, bool odd) {
    for (Square q : difference(big, small)) {
      int pos = odd ? 2 * (content(q) - *c) + 1 : 2 * (content(q) + *c);
      Domino d;
      auto next = add_domino(cur, pos, &d);
      if (!next) throw std::logic_error("quotient square does not lift to a domino");
      cur = *next;
      vertical += d.vertical();
    }
  };
  lay(out.q0, in.q0, false);
  lay(out.q1, in.q1, true);
  return vertical % 2 ? -1 : 1;
}

std::optional<Partition> add_domino(const Partition& p, int pos, Domino* added) {
  Beta b = beta_of(p, int(p.length()) + 3);
  if (!member(b, pos - 2) || member(b, pos)) return std::nullopt;
  if (pos - 2 < b.lo) return std::nullopt;
  std::replace(b.members.begin(), b.members.end(), pos - 2, pos);
  Partition next = partition_of(b);
  auto sq = difference(next, p);
  auto d = domino_from(sq.at(0), sq.at(1));
  if (!d) throw std::logic_error("domino addition produced a non-domino");
  if (added) *added = *d;
  return next;
}

std::optional<Partition> add_square(const Partition& p, int content_value, Square* added) {
  for (std::size_t r = 0; r <= p.length(); ++r) {
    int col = p.row(r);
    if (col - int(r) != content_value) continue;
    if (r > 0 && p.row(r - 1) <= col) return std::nullopt;
    std::vector<int> parts = p.parts();
    if (r == parts.size()) parts.push_back(0);
    ++parts[r];
    if (added) *added = {int(r), col};
    return Partition(std::move(parts));
  }
  return std::nullopt;
}

std::vector<Square> difference(const Partition& b, const Partition& a) {
  return SkewShape(b, a).squares();
}

namespace {

std::optional<Partition> from_square_set(const std::set<Square>& sq) {
  std::map<int, int> count;
  for (Square s : sq) {
    if (s.row < 0 || s.col < 0) return std::nullopt;
    ++count[s.row];
  }
  std::vector<int> rows;
  for (auto [r, n] : count) {
    if (r != int(rows.size())) return std::nullopt;
    rows.push_back(n);
  }
  for (Square s : sq)
    if (s.col >= rows[s.row]) return std::nullopt;
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r] > rows[r - 1]) return std::nullopt;
  return Partition(std::move(rows));
}

std::set<Square> square_set(const Partition& p) {
  auto v = SkewShape(p).squares();
  return {v.begin(), v.end()};
}

}  // namespace

std::optional<Partition> with_squares(const Partition& p, const std::vector<Square>& squares) {
  auto sq = square_set(p);
  for (Square s : squares)
    if (!sq.insert(s).second) return std::nullopt;
  return from_square_set(sq);
}

std::optional<Partition> without_squares(const Partition& p,
                                         const std::vector<Square>& squares) {
  auto sq = square_set(p);
  for (Square s : squares)
    if (!sq.erase(s)) return std::nullopt;
  return from_square_set(sq);
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

std::vector<SkewShape> skew_shapes_up_to(int n) {
  std::vector<SkewShape> out;
  auto all = partitions_up_to(n);
  for (auto& nu : all)
    for (auto& ka : all) {
      if (ka.size() > nu.size()) break;
      if (nu.contains(ka)) out.emplace_back(nu, ka);
    }
  return out;
}

}  // namespace dominotab
