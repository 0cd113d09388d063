#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stalg/formula.hpp"
#include "stalg/state_vector.hpp"

namespace stalg {

struct CompileOptions {
  // Largest number of distinct variables a single formula may mention.
  std::size_t cap = 16;
  // Also build the information vector (the falsifying states).
  bool with_info = false;
  // Store the unique reduced form under ascending event order instead of a
  // heuristically reduced one.
  bool canonical = false;
};

struct CompiledFormula {
  Formula formula;
  StateVector valid;
  std::optional<StateVector> info;
  std::optional<VarId> indicator;
  // Supplementary events this formula was split with.
  IndexSet supplementary;
};

/// Truth-table compilation. Columns outside the formula's variables are
/// holes. The returned vector has at most 2^(n-1) rows for n >= 1 variables.
/// Throws Errc::CompileCapExceeded when the formula mentions more than
/// options.cap variables.
CompiledFormula compile(const Formula& f, const CompileOptions& options = {});

// Information row of a clause: E_i goes to the lower set and !E_i to the
// upper set. The empty clause (false) gives t, a tautological clause gives
// Null. Throws Errc::NotAClause unless f is a literal, false, or an Or of
// literals.
TObject compile_clause_info(const Formula& clause);

// Compiles E_k <-> f and records k as the indicator.
// Throws Errc::IndicatorCollision when f mentions k.
CompiledFormula extend(const Formula& f, VarId k, const CompileOptions& options = {});

struct DecomposeOptions {
  // Compound subformulas nested this deep below their definition are
  // replaced by a fresh supplementary event.
  std::size_t max_depth = 2;
  // And, Or and Xor nodes with more operands are split into chunks.
  std::size_t max_arity = 8;
};

struct SplitFormula {
  // Definitions E_s <-> g first, the rewritten formula last.
  std::vector<Formula> parts;
  IndexSet supplementary;
};

// Allocates supplementary events in `registry`. Formulas that are already
// shallow and narrow come back as a single part.
SplitFormula split_with_supplementaries(const Formula& f, VariableRegistry& registry,
                                        const DecomposeOptions& options = {});

// Splits and compiles every part. A part that still exceeds the compile cap
// is split again with depth 1.
std::vector<CompiledFormula> decompose_with_supplementaries(
    const Formula& f, VariableRegistry& registry, const DecomposeOptions& decompose = {},
    const CompileOptions& options = {});

}  // namespace stalg
