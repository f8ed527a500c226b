#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dominotab {

// A partition: weakly decreasing sequence of positive parts. Trailing zeros
// passed to the constructor are dropped, so equal diagrams compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Part r, or 0 beyond the length.
  int row(std::size_t r) const { return r < parts_.size() ? parts_[r] : 0; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Partition& other) const;
  Partition transpose() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// Chain of partitions, each step adding one square (Young) or one domino.
using StandardChain = std::vector<Partition>;

// Weight vector with trailing zeros removed.
using Weight = std::vector<int>;
Weight trimmed(Weight w);

// Square of a diagram; row 0 is the top row, column 0 the leftmost.
struct Square {
  int row = 0;
  int col = 0;
  auto operator<=>(const Square&) const = default;
};

inline int content(Square s) { return s.col - s.row; }
inline bool adjacent(Square a, Square b) {
  int dr = a.row - b.row, dc = a.col - b.col;
  return dr * dr + dc * dc == 1;
}

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition outer_, Partition inner_ = {});

  int size() const { return outer.size() - inner.size(); }
  bool contains(Square s) const;
  std::vector<Square> squares() const;  // row-major
  bool straight() const { return inner.empty(); }

  auto operator<=>(const SkewShape&) const = default;
  bool operator==(const SkewShape&) const = default;
};

std::string to_string(const SkewShape& s);

// Half-turn of the diagram inside the box rows x cols.
SkewShape rotated(const SkewShape& s, int rows, int cols);
inline Square rotated(Square s, int rows, int cols) { return {rows - 1 - s.row, cols - 1 - s.col}; }

// True when the square set is a skew diagram (convex for the product order).
bool is_skew_diagram(const std::vector<Square>& squares);

enum class Orientation { horizontal, vertical };

// A domino given by its top-left square.
struct Domino {
  Square anchor;
  Orientation orient = Orientation::horizontal;

  Square first() const { return anchor; }
  Square second() const {
    return orient == Orientation::horizontal ? Square{anchor.row, anchor.col + 1}
                                             : Square{anchor.row + 1, anchor.col};
  }
  bool vertical() const { return orient == Orientation::vertical; }
  bool covers(Square s) const { return s == first() || s == second(); }

  auto operator<=>(const Domino&) const = default;
};

// Larger content of the two squares.
int domino_pos(const Domino& d);

// The square of d that can be added first (top, resp. left).
inline Square inward_square(const Domino& d) { return d.first(); }
inline Square outward_square(const Domino& d) { return d.second(); }

// Domino formed by two squares, if they are adjacent.
std::optional<Domino> domino_from(Square a, Square b);

// 2-core indexed by c: staircase of size 2c-1 for c >= 1, -2c for c <= 0.
Partition core_gamma(int c);

// Index of s_r(gamma_c): r = 0 gives 1-c, r = 1 gives -c.
int core_reflect(int r, int c);

struct TwoQuotient {
  int core = 0;
  Partition q0;  // hosts dominoes of even position
  Partition q1;  // hosts dominoes of odd position
  bool operator==(const TwoQuotient&) const = default;
};

TwoQuotient two_quotient(const Partition& p);

// The partition with 2-core gamma_c and 2-quotient (q0, q1).
Partition cq2_shape(int c, const Partition& q0, const Partition& q1);

// Skew variant: outer and inner shapes assembled separately.
SkewShape cq2_skew(int c, const SkewShape& chi0, const SkewShape& chi1);

// The partition obtained by scaling the diagram of mu by 2 both ways.
Partition dublpart(const Partition& mu);
SkewShape dublpart(const SkewShape& psi);

// 2-core of p computed by repeatedly stripping dominoes from the rim.
Partition strip_core(const Partition& p);

// A skew shape is domino-tileable iff both partitions share a 2-core and the
// quotients are nested. Returns the core index when tileable.
std::optional<int> tileable_core(const SkewShape& s);

// (-1)^(number of vertical dominoes) of any tiling, or nullopt when the
// shape has no domino tiling.
std::optional<int> epsilon2(const SkewShape& s);

// Partition obtained by adding a domino of the given position, if possible.
// The added domino is written to *added when non-null.
std::optional<Partition> add_domino(const Partition& p, int pos, Domino* added = nullptr);

// Partition obtained by adding one square of the given content, if addable.
std::optional<Partition> add_square(const Partition& p, int content_value,
                                    Square* added = nullptr);

// All partitions of n, largest parts first; all partitions of size <= n; all
// skew shapes nu/kappa with |nu| <= n.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);
std::vector<SkewShape> skew_shapes_up_to(int n);

// Squares of b not in a (b must contain a).
std::vector<Square> difference(const Partition& b, const Partition& a);

// Partition with the given squares added; nullopt if not a partition.
std::optional<Partition> with_squares(const Partition& p, const std::vector<Square>& squares);
std::optional<Partition> without_squares(const Partition& p,
                                         const std::vector<Square>& squares);

}  // namespace dominotab
