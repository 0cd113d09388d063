#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stalg/formula.hpp"

namespace stalg {

enum class UnknownVariables { AutoRegister, Reject };

// Formula DSL, lowest to highest precedence:
//
//   program  = { sep } [ formula { sep { sep } formula } ] { sep }
//   sep      = ";" | newline
//   formula  = implies { ( "<->" | "=" ) implies }      (left associative)
//   implies  = or [ "->" implies ]                       (right associative)
//   or       = xor { "|" xor }
//   xor      = and { "^" and }
//   and      = unary { "&" unary }
//   unary    = ( "!" | "~" ) unary | primary
//   primary  = identifier | "true" | "false" | "(" formula ")"
//   identifier = letter { letter | digit | "_" | "." }
//
// A newline inside parentheses or directly after an operator continues the
// formula. "#" starts a comment that runs to the end of the line.
std::vector<Formula> parse_program(std::string_view text, VariableRegistry& registry,
                                   UnknownVariables policy = UnknownVariables::AutoRegister);

// Exactly one formula.
Formula parse_formula(std::string_view text, VariableRegistry& registry,
                      UnknownVariables policy = UnknownVariables::AutoRegister);

struct DimacsOptions {
  // Clause-count mismatches become errors instead of warnings.
  bool strict = false;
};

struct DimacsResult {
  std::size_t num_vars = 0;
  std::size_t declared_clauses = 0;
  // One Or-of-literals per clause; the empty clause is False.
  std::vector<Formula> clauses;
  std::vector<std::string> warnings;
};

// Standard "p cnf N M" input. Registers E1..EN.
DimacsResult parse_dimacs(std::string_view text, VariableRegistry& registry,
                          const DimacsOptions& options = {});

}  // namespace stalg
