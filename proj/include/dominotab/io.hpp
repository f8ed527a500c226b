#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dominotab/dominoes.hpp"

namespace dominotab {

// Malformed input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line = 0;
  int column = 0;
};

// "4,3,1" and "4,3,1/2" (an empty part list is the empty partition).
Partition parse_partition(std::string_view text);
SkewShape parse_shape(std::string_view text);
std::string format_shape(const SkewShape& s);

// A domino tableau with the ordinates of an augmentation, if any were given.
struct AnnotatedDomino {
  DominoTableau tableau;
  std::vector<int> ordinates;  // parallel to tableau.dominoes, empty if absent
};

using Tableau = std::variant<YoungTableau, AnnotatedDomino>;

// JSON forms:
//   {"type":"young","shape":{"outer":[..],"inner":[..]},"rows":[[..],..]}
//   {"type":"domino","shape":{..},"dominoes":[{"row":r,"col":c,"orient":"h"|"v","entry":e}, ..]}
// Domino items may carry "ordinate". Entries are stored as given, minus offset.
std::string to_json(const YoungTableau& t, int offset = 0);
std::string to_json(const DominoTableau& t, int offset = 0, const std::vector<int>& ordinates = {});
std::string to_json(const Tableau& t, int offset = 0);

// Figure-like text: a header line "young <shape>" or "domino <shape>", then a
// grid with one 5-character-wide square per column and borders drawn with
// '+', '-' and '|'. A domino shows its entry (and "_j" for its ordinate) in
// its first square. Wider squares are used when a label needs them.
std::string to_ascii(const YoungTableau& t, int offset = 0);
std::string to_ascii(const DominoTableau& t, int offset = 0, const std::vector<int>& ordinates = {});
std::string to_ascii(const Tableau& t, int offset = 0);

// JSON or ASCII, detected from the first non-blank character. Throws
// ParseError with a position for syntax errors and for tableaux that are not
// semistandard (pointing at the offending domino or row).
Tableau parse_tableau(std::string_view text, int offset = 0);
// A JSON array of tableaux, a single tableau, or ASCII tableaux one after the
// other (lines starting with '#' are ignored).
std::vector<Tableau> parse_tableaux(std::string_view text, int offset = 0);

}  // namespace dominotab
