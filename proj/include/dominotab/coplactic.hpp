#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dominotab/dominoes.hpp"

namespace dominotab {

// One move of the hole during e_i. Rows are 0 for entry i and 1 for i+1;
// ordinates are those of the minimal augmentation restricted to these two
// entries (row 1 starts at ordinate 0).
struct CoplacticStep {
  enum class Kind { replace, t0, t1 };
  Kind kind = Kind::replace;
  int hole_row = 0, hole_ord = 0;  // the cell i_j being filled
  int src_row = 0, src_ord = 0;    // replace: where the filler came from
  int k = 0;                       // t1: size of the matched pattern
};

struct CoplacticTrace {
  Coplactic kind = Coplactic::e;
  int index = 0;
  // Steps of e_i on the input (kind e), or of e_i on the output (kind f),
  // which the f computation undoes in reverse order.
  std::vector<CoplacticStep> steps;
  std::vector<Square> active;  // squares of the active region in the output
};

// e_i or f_i; nullopt when inapplicable.
std::optional<DominoTableau> coplactic_dom(Coplactic kind, int i, const DominoTableau& d,
                                           CoplacticTrace* trace = nullptr);

// "1_0<-1_1, T0, 2_2<-2_3"; for f the same steps reversed with "->".
// The offsets are added to printed entries and ordinates.
std::string format_trace(const CoplacticTrace& t, int entry_offset = 0, int ordinate_offset = 0);

struct Raising {
  DominoTableau yamanouchi;
  std::vector<int> word;  // indices of the e's applied, in order
};

// Applies the smallest applicable e_i until none applies.
Raising raise_to_yamanouchi(const DominoTableau& d);

// Split into the Yamanouchi tableau of the coplactic class and the straight
// Young tableau at the same place in its own coplactic graph.
std::pair<DominoTableau, YoungTableau> cl_split(const DominoTableau& d);
// Inverse of cl_split; throws std::invalid_argument outside its image.
DominoTableau cl_merge(const DominoTableau& y, const YoungTableau& p);

}  // namespace dominotab
