#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stalg {

// Identifier of an event E_i. Ids start at 1; the algebra never assumes an
// upper bound, so index sets are sparse.
using VarId = std::uint32_t;

// Sorted, duplicate-free list of event ids.
using IndexSet = std::vector<VarId>;

/// A single row of a state vector: events in `upper` are fixed to 1, events in
/// `lower` are fixed to 0, every other event is a hole.
///
/// The default-constructed value is the unit t (all holes). Construction from
/// overlapping sets yields the distinguished Null object, which stands for the
/// empty set of states and absorbs every product.
class TObject {
 public:
  TObject() = default;

  static TObject unit() { return TObject(); }
  static TObject null();
  /// Sorts and deduplicates both sets; overlap produces Null.
  static TObject make(IndexSet upper, IndexSet lower);
  static TObject upper_of(VarId i);
  static TObject lower_of(VarId i);

  bool is_null() const noexcept { return null_; }
  bool is_unit() const noexcept { return !null_ && upper_.empty() && lower_.empty(); }

  const IndexSet& upper() const noexcept { return upper_; }
  const IndexSet& lower() const noexcept { return lower_; }

  // Number of fixed (non-hole) columns.
  std::size_t rank() const noexcept { return upper_.size() + lower_.size(); }
  // Largest id mentioned, 0 when none.
  VarId max_var() const noexcept;

  bool has_upper(VarId i) const noexcept;
  bool has_lower(VarId i) const noexcept;
  bool fixes(VarId i) const noexcept { return has_upper(i) || has_lower(i); }

  // Moves i to the given side regardless of its previous placement.
  TObject with_upper(VarId i) const;
  TObject with_lower(VarId i) const;
  // Turns column i into a hole.
  TObject without(VarId i) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const TObject&, const TObject&) = default;

  // Canonical row order: rank first, then upper and lower lexicographically.
  // Null sorts after every proper row.
  friend std::strong_ordering operator<=>(const TObject& a, const TObject& b);

 private:
  TObject(IndexSet upper, IndexSet lower, bool null)
      : upper_(std::move(upper)), lower_(std::move(lower)), null_(null) {}

  IndexSet upper_;
  IndexSet lower_;
  bool null_ = false;

  friend TObject multiply(const TObject& a, const TObject& b);
};

/// Result of splitting `a` against `b`: the part of a inside b and the
/// pairwise-orthogonal remainder rows.
struct OrthoSplit {
  TObject parallel;
  std::vector<TObject> perpendicular;
};

// t^{a1}_{b1} t^{a2}_{b2} = t^{a1 a2}_{b1 b2}; Null when the unions overlap.
TObject multiply(const TObject& a, const TObject& b);

// Splits a into (a with i fixed to 1, a with i fixed to 0).
// Throws Errc::IndexAlreadyFixed when a already fixes i.
std::pair<TObject, TObject> decompose(const TObject& a, VarId i);

// True iff every state of a is a state of b. Both operands must be non-null.
bool is_subset(const TObject& a, const TObject& b);

bool is_orthogonal(const TObject& a, const TObject& b);

/// Peels the difference indices of b relative to a, lower-side indices first
/// and each side in ascending id order. Each emitted row agrees with b on all
/// previously peeled indices and disagrees on the current one. When a and b
/// share no state the split is (Null, {a}).
OrthoSplit orthogonalize(const TObject& a, const TObject& b);

// Set difference a \ b as pairwise-orthogonal rows.
std::vector<TObject> subtract(const TObject& a, const TObject& b);

// Row text over `width` columns using '1', '0' and '-'. Throws on Null or
// when a fixed id exceeds width.
std::string to_row_string(const TObject& t, std::size_t width);
TObject parse_row(std::string_view text);

// Compact text: "t", "t^{1,4}", "t_{3}", "t^{1,4}_{3,6}", or "0" for Null.
std::string to_compact_string(const TObject& t);
TObject parse_compact(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TObject& t);

}  // namespace stalg

template <>
struct std::hash<stalg::TObject> {
  std::size_t operator()(const stalg::TObject& t) const noexcept { return t.hash(); }
};
