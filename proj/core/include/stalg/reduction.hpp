#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stalg/state_vector.hpp"

namespace stalg {

/// Strict order on events used by canonical reduction; position 0 is the
/// smallest event. Must be a permutation of the ids it covers.
class VariableOrder {
 public:
  VariableOrder() = default;
  // Throws Errc::InvalidOrder on duplicates or id 0.
  explicit VariableOrder(std::vector<VarId> order);

  // E1 < E2 < ... < En.
  static VariableOrder ascending(std::size_t n);

  const std::vector<VarId>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool contains(VarId i) const noexcept;
  // Position of i, or size() when absent.
  std::size_t position(VarId i) const noexcept;

 private:
  std::vector<VarId> order_;
  std::vector<std::size_t> position_;  // indexed by id
};

struct ReductionStats {
  std::uint64_t pairwise_checks = 0;
  std::uint64_t reductions_applied = 0;
  std::size_t rows_in = 0;
  std::size_t rows_out = 0;
  // Largest number of fixed columns in any input row.
  std::size_t max_defined = 0;

  // "key=value" pairs separated by single spaces, fixed key order.
  std::string to_key_values() const;
};

// Merges two rows that differ in exactly one column, where one has 1 and the
// other 0. Returns nothing otherwise.
std::optional<TObject> atomic_reduce(const TObject& a, const TObject& b);

/// Applies atomic reductions until no reducible pair remains.
///
/// Coordinate-exact: a pair with multiplicities m1, m2 reduces min(m1, m2)
/// times and the leftovers stay. Candidate partners are found by flipping one
/// fixed column and looking the result up, so every counted check is a real
/// reducible candidate.
std::pair<StateVector, ReductionStats> reduce_heuristic(const StateVector& s);

/// Unique normal form of the state set of s under `order`.
///
/// Equivalent to expanding s to its distinct states and applying atomic
/// reduction exhaustively by the last event in the order, then the one before
/// it, down to the first. Computed by cofactor recursion on the first pivot
/// event instead of materializing the expansion. Multiplicities are dropped.
/// Throws Errc::InvalidOrder when s fixes an event missing from `order`.
StateVector canonicalize(const StateVector& s, const VariableOrder& order,
                         Execution exec = Execution::Sequential);

// canonicalize(multiply(s, q), order).
StateVector multiply_canonical(const StateVector& s, const StateVector& q,
                               const VariableOrder& order, OpCounters* counters = nullptr,
                               Execution exec = Execution::Sequential);

}  // namespace stalg
