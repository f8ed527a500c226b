#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dominotab/shapes.hpp"

namespace dominotab {

using Word = std::vector<int>;

// Semistandard skew Young tableau, entries from 0. rows[r] holds the entries
// of row r from left to right, starting at column inner.row(r).
struct YoungTableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;

  YoungTableau() = default;
  YoungTableau(SkewShape s, std::vector<std::vector<int>> r);

  int at(Square s) const { return rows[s.row][s.col - shape.inner.row(s.row)]; }
  int& at(Square s) { return rows[s.row][s.col - shape.inner.row(s.row)]; }
  Weight weight() const;
  int size() const { return shape.size(); }

  bool operator==(const YoungTableau&) const = default;
  auto operator<=>(const YoungTableau&) const = default;
};

bool is_semistandard(const YoungTableau& t);
std::string to_string(const YoungTableau& t);

enum class Coplactic { e, f };

bool is_yamanouchi_word(const Word& w);

// Columns left to right, each read bottom to top.
Word column_word(const YoungTableau& t);

// Failure to be nu/kappa-dominant. For an order violation (row, ordinate) is
// the witness (i, j): (i+1)_j does not lie strictly left of i_j.
struct DominanceFailure {
  enum class Kind { weight_mismatch, order_violation };
  Kind kind = Kind::weight_mismatch;
  int row = -1;
  int ordinate = -1;
  std::string message() const;
};

// Ordinates parallel to the cells of the carrier (squares in row-major order
// for Young tableaux, the domino list for domino tableaux).
struct Augmentation {
  SkewShape target;
  std::vector<int> ordinate;
  bool operator==(const Augmentation&) const = default;
};

using DominanceResult = std::variant<Augmentation, DominanceFailure>;

inline bool dominant(const DominanceResult& r) { return std::holds_alternative<Augmentation>(r); }

// Shared engine: cells with entries and positions, against a target shape.
DominanceResult augment_cells(const std::vector<int>& entry, const std::vector<int>& pos,
                              const SkewShape& target);

DominanceResult dominance_young(const YoungTableau& t, const SkewShape& target);

// Dominance of a star tableau T0*T1, with T1 read above and to the right of T0.
DominanceResult dominance_star(const YoungTableau& t0, const YoungTableau& t1,
                               const SkewShape& target);

enum class SlideOrder { bottom_corner_first, top_corner_first };

YoungTableau rectify(const YoungTableau& t, SlideOrder order = SlideOrder::bottom_corner_first);

std::optional<YoungTableau> coplactic_young(Coplactic kind, int i, const YoungTableau& t);

YoungTableau canonical(const Partition& lambda);

bool is_lr(const YoungTableau& t0, const YoungTableau& t1);

std::vector<YoungTableau> enumerate_sst(const SkewShape& shape, int n);
std::vector<YoungTableau> enumerate_sst_weight(const SkewShape& shape, const Weight& weight);

// Squares ordered by entry, then left to right.
StandardChain standardise(const YoungTableau& t);
// Entries of t in the order in which standardise adds their squares.
std::vector<int> standard_entries(const YoungTableau& t);
// Fill the squares added by a single-square chain with the given entries.
YoungTableau destandardise(const StandardChain& chain, const std::vector<int>& entries);

bool is_square_chain(const StandardChain& chain);

// Inverse of a coplactic engine by a half-turn: the tableau is rotated inside
// the box rows x cols and entries x become top - x.
YoungTableau rotate(const YoungTableau& t, int rows, int cols, int top);

// Smallest shift K for which cells of entries i (positions p0, decreasing)
// and i+1 (positions p1, decreasing) are dominant for (K+a, b)/(K, 0).
int minimal_slack(const std::vector<int>& p0, const std::vector<int>& p1);

}  // namespace dominotab
