#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dominotab/shapes.hpp"
#include "dominotab/young.hpp"

namespace dominotab {

struct PlacedDomino {
  Domino d;
  int entry = 0;
  int pos() const { return domino_pos(d); }
  auto operator<=>(const PlacedDomino&) const = default;
};

// Semistandard domino tableau. The dominoes are kept sorted by (entry, pos),
// which is the order of the standardisation chain.
struct DominoTableau {
  SkewShape shape;
  std::vector<PlacedDomino> dominoes;

  DominoTableau() = default;
  DominoTableau(SkewShape s, std::vector<PlacedDomino> ds);

  Weight weight() const;
  std::size_t size() const { return dominoes.size(); }
  // index of the domino covering s, or -1
  int find(Square s) const;

  bool operator==(const DominoTableau&) const = default;
  auto operator<=>(const DominoTableau&) const = default;
};

std::string to_string(const DominoTableau& t);

struct ValidationError {
  enum class Kind { outside, overlap, gap, order };
  Kind kind = Kind::outside;
  int first = -1;   // domino indices of the offending pair (second may be -1)
  int second = -1;
  std::string message;
};

std::optional<ValidationError> validate_ssdt(const DominoTableau& t);
inline bool is_ssdt(const DominoTableau& t) { return !validate_ssdt(t); }

// Local form of semistandardness: entries weakly increase across vertical
// edges (left to right) and strictly increase across horizontal edges (downward).
bool locally_semistandard(const DominoTableau& t);

int twospin(const DominoTableau& t);

// Dominoes ordered by leftmost column, then bottommost row from the bottom up.
Word column_word(const DominoTableau& t);
bool is_yamanouchi_dom(const DominoTableau& t);

DominanceResult augment_dom(const DominoTableau& t, const SkewShape& target);

// Cells (i, j) of a target shape in some total order.
using ValidOrder = std::vector<std::pair<int, int>>;

bool is_valid_order(const ValidOrder& order, const SkewShape& target);
ValidOrder semitic_order(const SkewShape& target);
ValidOrder kanji_order(const SkewShape& target);
// Every linear extension of the order i_j <= k_l for i <= k and j >= l.
void for_each_valid_order(const SkewShape& target, const std::function<void(const ValidOrder&)>& f);

// Chain adding the dominoes in the order of their entry-ordinate pairs.
// Throws std::logic_error when a step is not a valid domino addition.
StandardChain specialise(const DominoTableau& t, const Augmentation& aug, const ValidOrder& order);

StandardChain standardisation(const DominoTableau& t);
bool is_domino_chain(const StandardChain& chain);
// The tableau whose k-th chain step carries entries[k].
DominoTableau from_chain(const StandardChain& chain, const std::vector<int>& entries);

DominoTableau cq2_tab(int c, const YoungTableau& t0, const YoungTableau& t1);
std::pair<YoungTableau, YoungTableau> cq2_tab_inv(int c, const DominoTableau& t);
// 2-core index of the shape of t.
int core_index(const DominoTableau& t);

std::vector<DominoTableau> enumerate_ssdt(const SkewShape& shape, int n, bool yam_only = false);
std::vector<DominoTableau> enumerate_ssdt_weight(const SkewShape& shape, const Weight& weight,
                                                 bool yam_only = false);
std::vector<StandardChain> enumerate_standard_domino(const SkewShape& shape);

// Half-turn inside the box rows x cols, entries x mapped to top - x.
DominoTableau rotate(const DominoTableau& t, int rows, int cols, int top);

int max_entry(const DominoTableau& t);

}  // namespace dominotab
