#pragma once
// Worked examples used by several suites. Entries are 0-based, so a printed
// entry k appears here as k-1.

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dominotab/dominoes.hpp"

namespace fixture {

using namespace dominotab;

inline PlacedDomino H(int r, int c, int e) { return {{{r, c}, Orientation::horizontal}, e}; }
// vertical domino by its top square
inline PlacedDomino V(int r, int c, int e) { return {{{r, c}, Orientation::vertical}, e}; }

// The switching example: shape (4,4,3,3,2)/(2), weight (2,2,2,1).
inline DominoTableau pioneex() {
  return DominoTableau(SkewShape({4, 4, 3, 3, 2}, {2}),
                       {V(1, 0, 0), V(1, 1, 0), H(3, 0, 1), V(0, 2, 1), V(2, 2, 2),
                        V(0, 3, 2), H(4, 0, 3)});
}

// The coplactic example, augmented in the text for (5,5,4)/(2,1,0).
inline DominoTableau dagger() {
  return DominoTableau(SkewShape({8, 8, 8, 8, 6, 2}, {7, 5, 4, 1, 1}),
                       {V(3, 1, 0), H(1, 5, 0), V(0, 7, 0), H(5, 0, 1), H(3, 2, 1), H(2, 4, 1),
                        H(2, 6, 1), H(4, 2, 2), V(3, 4, 2), V(3, 5, 2), H(3, 6, 2)});
}

// e_0 and e_1 of dagger() as displayed.
inline DominoTableau dagger_e0() {
  return DominoTableau(SkewShape({8, 8, 8, 8, 6, 2}, {7, 5, 4, 1, 1}),
                       {V(3, 1, 0), H(1, 5, 0), V(0, 7, 0), H(5, 0, 1), H(3, 2, 0), H(2, 4, 1),
                        H(2, 6, 1), H(4, 2, 2), V(3, 4, 2), V(3, 5, 2), H(3, 6, 2)});
}

inline DominoTableau dagger_e1() {
  return DominoTableau(SkewShape({8, 8, 8, 8, 6, 2}, {7, 5, 4, 1, 1}),
                       {V(3, 1, 0), H(1, 5, 0), V(0, 7, 0), H(5, 0, 1), H(3, 2, 1), V(2, 4, 1),
                        V(2, 5, 1), H(2, 6, 1), H(4, 2, 2), H(4, 4, 2), H(3, 6, 2)});
}

}  // namespace fixture

namespace fixture {

// The pair displayed next to the switching example (U carries the blue
// entries, V the red ones).
inline YoungTableau pioneex_u() {
  return YoungTableau(SkewShape({4, 3, 1, 1}, {2}), {{1, 2}, {0, 0, 2}, {1}, {3}});
}

inline YoungTableau pioneex_v() {
  return YoungTableau(SkewShape({4, 4, 3, 3, 2}, {4, 3, 1, 1}), {{}, {2}, {0, 1}, {1, 2}, {0, 3}});
}

// Figure transcription: items "r,c:e;o" or "r,c:e_j;o". o = 0 is a horizontal
// domino on (r,c),(r,c+1); o = 1 a vertical one on (r-1,c),(r,c). These
// figures already use entries from 0. Ordinates, when given, go to *ords.
inline std::vector<PlacedDomino> ribbons(const std::string& text, std::vector<int>* ords = nullptr) {
  std::vector<PlacedDomino> out;
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    int r, c, e, j = -1, o;
    char tail[8] = {0};
    if (std::sscanf(item.c_str(), "%d,%d:%d_%d;%d", &r, &c, &e, &j, &o) != 5) {
      j = -1;
      if (std::sscanf(item.c_str(), "%d,%d:%d;%d%1s", &r, &c, &e, &o, tail) != 4)
        throw std::invalid_argument("bad ribbon " + item);
    }
    out.push_back(o == 0 ? H(r, c, e) : V(r - 1, c, e));
    if (ords) ords->push_back(j);
  }
  return out;
}

// The running star tableau T0*T1 of the orbit example, weight (4,2,2,1).
inline YoungTableau star_t0() { return YoungTableau(SkewShape({3, 2, 1}, {1}), {{1, 2}, {0, 3}, {2}}); }
inline YoungTableau star_t1() { return YoungTableau(SkewShape({3, 1}), {{0, 0, 0}, {1}}); }

// The unique L in Yam2((6,5,3,3,3), (4,3,2,1)) and its image M, with ordinates.
inline const char* yamyam_l =
    "1,0:0_3;1 1,1:0_2;1 0,2:0_1;0 0,4:0_0;0 2,0:1_2;0 2,2:1_1;1 1,3:1_0;0 "
    "4,0:2_1;1 3,1:2_0;0 4,1:3_0;0";
inline const char* yamyam_m =
    "1,6:1_0;0 0,6:0_0;0 1,4:1_1;0 0,4:0_1;0 1,3:0_2;1 1,2:0_3;1 1,1:0_4;1 1,0:0_5;1 "
    "3,4:2_0;1 3,5:2_1;1 3,2:2_2;0 2,2:1_2;0 3,1:1_3;1 3,0:1_4;1 "
    "5,2:4_0;0 4,2:3_0;0 5,1:3_1;1 5,0:3_2;1 7,1:4_1;1 7,0:4_2;1";

// The orbit of the running example from Sigma'_2 to Sigma_1, one move of open
// chains per step; every tableau in it is Yamanouchi.
struct OrbitStep {
  int c;
  bool primed;
  const char* text;
};

inline const std::vector<OrbitStep>& phi_orbit() {
  static const std::vector<OrbitStep> orbit = {
      {2, true, "8,0:2;1 6,0:0;1 5,1:3;1 3,1:1;1 2,2:2;0 1,2:1;0 0,3:0;0 0,5:0;0 0,7:0;0"},
      {-1, false, "7,0:2;1 5,0:0;1 4,1:3;1 2,1:1;1 2,2:2;0 1,2:1;0 0,2:0;0 0,4:0;0 0,6:0;0"},
      {1, true, "6,0:2;1 4,0:0;1 3,1:3;0 1,1:1;0 1,3:1;0 2,1:2;0 0,1:0;0 0,3:0;0 0,5:0;0"},
      {0, false, "5,0:2;1 3,0:0;1 3,1:3;0 1,2:1;0 1,4:1;0 2,1:2;0 1,1:0;1 0,2:0;0 0,4:0;0"},
      {0, true, "4,0:2;1 2,0:0;1 4,1:3;1 1,2:1;0 1,4:1;0 2,2:2;0 2,1:0;1 0,2:0;0 0,4:0;0"},
      {1, false, "4,0:2;1 2,0:0;1 4,1:3;1 2,2:1;1 1,3:1;0 2,3:2;0 2,1:0;1 0,3:0;0 0,5:0;0"},
  };
  return orbit;
}

}  // namespace fixture
