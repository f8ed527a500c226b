#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dominotab/dominoes.hpp"

namespace dominotab {

// s_r(cq2(gamma, T0, T1)) = cq2(s_r(gamma), T1, T0); an involution.
DominoTableau s_reflect_tab(int r, const DominoTableau& d);

// The square of d kept in place by s_r: its content has parity r + 1.
Square fixed_square(const Domino& d, int r);

enum class ChainKind { open, closed };

// A connected set of dominoes of D that s_r replaces, with their replacements.
struct Chain {
  int r = 0;
  ChainKind kind = ChainKind::closed;
  std::vector<PlacedDomino> dominoes;
  std::vector<PlacedDomino> replacement;
  // the square each moved domino shares with the domino replacing it
  std::vector<Square> pivots;
  // squares given up and gained by moving the chain (empty when closed)
  std::vector<Square> removed, added;

  bool operator==(const Chain&) const = default;
};

struct ChainSet {
  std::vector<Chain> chains;
  // dominoes that s_r leaves in place
  std::vector<PlacedDomino> residual;
};

ChainSet chains(int r, const DominoTableau& d);

// Throws std::invalid_argument if a chain is not one of chains(r, d).
// Squares that s_r toggles in both the inner and outer shape (empty boundary,
// no domino) are toggled only when the subset is every chain, so moving all
// chains gives exactly s_reflect_tab.
DominoTableau move_chains(const DominoTableau& d, int r, const std::vector<Chain>& subset);

// Moves the open chains for s_r, always toggling the empty boundary squares,
// so that moc(r, .) is an involution mapping cq2 shapes to cq2 shapes.
DominoTableau moc(int r, const DominoTableau& d);

// Pairs of domino indices (into d.dominoes) whose fixed squares for s_r have
// equal content and whose entry-ordinate cells are adjacent.
std::vector<std::pair<int, int>> blocked_pairs(const DominoTableau& d, const Augmentation& aug, int r);
bool is_unblocked(const Chain& c, const DominoTableau& d, const Augmentation& aug);

// n = lambda_0 + (lambda')^t_0 for chi = lambda/mu and chi' = lambda'/mu'.
int segregated_threshold(const SkewShape& chi, const SkewShape& chi1);
// Sigma_c (primed: Sigma'_c) of a tableau of shape chi * chi' is segregated.
bool is_segregated(int c, const SkewShape& chi, const SkewShape& chi1, bool primed);

// Orbit slots: Sigma_c sits at 2c and Sigma'_c at 1 - 2c; neighbouring slots k
// and k+1 are exchanged by s_1 for even k and by s_0 for odd k.
int orbit_slot(int c, bool primed);

// Phi_c (primed: Phi'_c) of T0 * T1. start_c picks the segregated tableau the
// orbit walk starts from; by default the largest c with Sigma_c segregated.
DominoTableau phi(int c, const YoungTableau& t0, const YoungTableau& t1, bool primed,
                  std::optional<int> start_c = std::nullopt);

// X_Dom: returns (T1', T0') with T1' of the shape of t1.
std::pair<YoungTableau, YoungTableau> x_dom(const YoungTableau& t0, const YoungTableau& t1,
                                            std::optional<int> start_c = std::nullopt);

// Each domino i_j of L (augmented for psi) becomes a pair of dominoes in the
// 2x2 block at (2i, 2j) of dublpart(psi); throws if L is not psi-dominant.
DominoTableau yamyam_fwd(const DominoTableau& l, const SkewShape& psi);
// Inverse, using the augmentation of M for chi; throws std::invalid_argument
// if M is not built from such blocks.
DominoTableau yamyam_bwd(const DominoTableau& m, const SkewShape& chi);

}  // namespace dominotab
