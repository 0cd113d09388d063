#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stalg/state_vector.hpp"

namespace stalg {

// Row text: one row per line over `width` columns ('1', '0', '-'), followed
// by " xK" when the multiplicity K exceeds 1. Lines starting with '#' and
// blank lines are ignored on input. The zero vector prints as "# empty".
std::string to_rows_text(const StateVector& s, std::size_t width);

struct ParsedRows {
  StateVector vector;
  std::size_t width = 0;
};
ParsedRows parse_rows_text(std::string_view text);

// Several vectors separated by blank lines. Every row shares one width. A
// block holding only the comment "# empty" is the zero vector.
struct ParsedRowBlocks {
  std::vector<StateVector> vectors;
  std::size_t width = 0;
};
ParsedRowBlocks parse_row_blocks(std::string_view text);

// Structured form:
//   {"universe":N,"rows":[{"upper":[..],"lower":[..],"mult":K},...]}
// Output is compact and key-ordered, so text round trips are byte-identical.
std::string to_json(const StateVector& s, std::size_t universe);
ParsedRows parse_json(std::string_view text);

}  // namespace stalg
