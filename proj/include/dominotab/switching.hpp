#pragma once

#include <utility>
#include <vector>

#include "dominotab/dominoes.hpp"

namespace dominotab {

// grid[i][j] is the partition lambda^[i,j]; it grows with i and j. S runs down
// the left edge (j = 0), T along the bottom edge (i = last), T' along the top
// and S' down the right edge.
struct SwitchingFamily {
  std::vector<std::vector<Partition>> grid;
};

// The fourth corner of a unit square of a family: given a ⊂ b ⊂ d with d/a two
// squares, the other partition between a and d, or b itself if it is the
// only one.
Partition switch_corner(const Partition& a, const Partition& b, const Partition& d);

// X(S, T) = (T', S') for single-square chains with S.back() == T.front().
std::pair<StandardChain, StandardChain> switch_standard(const StandardChain& s, const StandardChain& t,
                                                        SwitchingFamily* family = nullptr);

// Semistandard switching: (V', U') with V' carrying the entries of v.
std::pair<YoungTableau, YoungTableau> switch_pair(const YoungTableau& u, const YoungTableau& v);

bool is_self_switching(const StandardChain& s, const StandardChain& t);
bool is_self_switching(const YoungTableau& u, const YoungTableau& v);

// Standard domino tableau (a domino chain) to its self-switching pair.
std::pair<StandardChain, StandardChain> pi0(const StandardChain& d, SwitchingFamily* family = nullptr);
// Throws std::invalid_argument if (s, t) is not self-switching.
StandardChain pi0_inv(const StandardChain& s, const StandardChain& t);

std::pair<YoungTableau, YoungTableau> pi1(const DominoTableau& d, SwitchingFamily* family = nullptr);
// The same pair computed by the red/blue shuffle of the entries.
std::pair<YoungTableau, YoungTableau> pi1_shuffle(const DominoTableau& d);
DominoTableau pi1_inv(const YoungTableau& u, const YoungTableau& v);

YoungTableau pi(const DominoTableau& d);

// Formal concatenation U_0|...|U_k of tableaux with matching shapes.
using Concatenation = std::vector<YoungTableau>;
std::pair<Concatenation, Concatenation> pi2(const std::vector<DominoTableau>& parts);

// Single-square chain adding the squares of t in the order of their
// entry-ordinate pairs.
StandardChain specialise(const YoungTableau& t, const Augmentation& aug, const ValidOrder& order);

}  // namespace dominotab
