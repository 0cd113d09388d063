#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stalg/tobject.hpp"

namespace stalg {

using Multiplicity = std::uint64_t;

// Exact state counts; 2^N overflows machine integers quickly.
using Count = boost::multiprecision::cpp_int;

struct Row {
  TObject term;
  Multiplicity mult = 1;

  friend bool operator==(const Row&, const Row&) = default;
};

enum class Polarity { Upper, Lower };

enum class EventStatus { IdenticallyTrue, IdenticallyFalse, Indefinite, EmptySpace };

enum class Execution { Sequential, Parallel };

// Work counters shared by the vector operations. Callers pass a pointer to
// accumulate across calls; nullptr disables counting.
struct OpCounters {
  std::uint64_t pairwise_products = 0;
  std::uint64_t pairwise_subtractions = 0;

  OpCounters& operator+=(const OpCounters& other) {
    pairwise_products += other.pairwise_products;
    pairwise_subtractions += other.pairwise_subtractions;
    return *this;
  }
};

/// Row decomposition of a state vector: a sum of t-objects with positive
/// integer multiplicities.
///
/// Rows are kept merged (identical t-objects add their multiplicities) and
/// sorted in canonical row order, so two vectors compare equal exactly when
/// their row decompositions coincide. Null rows are never stored, and an empty
/// row list is the zero vector.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Row> rows);
  StateVector(std::initializer_list<TObject> terms);

  static StateVector trivial();
  static StateVector from_terms(std::vector<TObject> terms);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  // Sum of multiplicities; counts duplicated states.
  Multiplicity total_mass() const noexcept;
  VarId max_var() const noexcept;

  // Rows as t-objects, multiplicities dropped.
  std::vector<TObject> terms() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<Row> rows_;
};

std::ostream& operator<<(std::ostream& os, const StateVector& s);

// All pairwise row products; Null products are dropped and multiplicities
// multiply. Counts n1*n2 pairwise products.
StateVector multiply(const StateVector& s, const StateVector& q, OpCounters* counters = nullptr,
                     Execution exec = Execution::Sequential);

StateVector add(const StateVector& s, const StateVector& q);

// States of s not in q, as pairwise-orthogonal rows of multiplicity 1.
// Not multiplicity preserving.
StateVector subtract_set(const StateVector& s, const StateVector& q,
                         OpCounters* counters = nullptr);

// s t^i or s t_i.
StateVector subvector(const StateVector& s, VarId i, Polarity polarity);

// Set-equal vector with pairwise-orthogonal rows of multiplicity 1.
StateVector orthogonalize_vector(const StateVector& s, OpCounters* counters = nullptr);

// Number of distinct states over `universe` columns.
// Throws Errc::UniverseTooSmall when s mentions an id above `universe`.
Count cardinality(const StateVector& s, std::size_t universe);

// Union of fixed columns over all rows.
IndexSet pivot(const StateVector& s);

// Both throw Errc::EmptyVector on the zero vector.
bool is_free(const StateVector& s, VarId i);
IndexSet support(const StateVector& s);

EventStatus event_status(const StateVector& s, VarId i);

// Index juggling and event removal act row by row; results are meaningful up
// to equivalence only.
StateVector raise_index(const StateVector& s, VarId i);
StateVector lower_index(const StateVector& s, VarId i);
StateVector remove_event(const StateVector& s, VarId i);

// True iff e_i is determined by the remaining events. Throws on empty input.
bool is_boolean_function(const StateVector& s, VarId i);

// Set equality via s \ q = 0 and q \ s = 0.
bool equivalent(const StateVector& s, const StateVector& q, OpCounters* counters = nullptr);

// t \ s. Throws Errc::UniverseTooSmall like cardinality.
StateVector complement(const StateVector& s, std::size_t universe);

// Drops rows contained in another row and resets multiplicities to 1.
// Equivalence-only simplification.
StateVector absorb_subsumed(const StateVector& s);

const char* to_string(EventStatus status) noexcept;

}  // namespace stalg
