#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stalg/state_vector.hpp"

namespace stalg::dense {

inline constexpr std::size_t kDefaultCap = 16;

// Bit of the state index holding E_i in a universe of n events.
constexpr std::uint64_t state_bit(VarId i, std::size_t n) {
  return std::uint64_t{1} << (n - i);
}

/// Coordinate representation over all 2^n states.
///
/// State index layout: reading a fully fixed row string "e1 e2 ... en" as a
/// binary number gives its index, so E1 is the most significant bit and E_n
/// bit 0. Coordinates are arbitrary integers, so differences and vanishing
/// combinations are representable.
class DenseVector {
 public:
  DenseVector() = default;
  // Zero vector. Throws Errc::UniverseTooLarge when n > cap.
  explicit DenseVector(std::size_t n, std::size_t cap = kDefaultCap);
  static DenseVector ones(std::size_t n, std::size_t cap = kDefaultCap);

  std::size_t universe() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return coords_.size(); }

  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_binary() const noexcept;
  // Number of nonzero coordinates.
  std::size_t popcount() const noexcept;

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> coords_;
};

// Coordinate k accumulates the multiplicity of every row containing state k.
// Throws Errc::UniverseTooLarge over cap, Errc::UniverseTooSmall when a row
// mentions an id above n.
DenseVector expand(const StateVector& s, std::size_t n, std::size_t cap = kDefaultCap);
DenseVector expand(const TObject& t, std::size_t n, std::size_t cap = kDefaultCap);

// Coordinate-wise arithmetic. Throws Errc::UniverseMismatch on differing n.
DenseVector add(const DenseVector& a, const DenseVector& b);
DenseVector sub(const DenseVector& a, const DenseVector& b);
DenseVector mul(const DenseVector& a, const DenseVector& b);
DenseVector scale(const DenseVector& a, std::int64_t c);

// Clamps every coordinate to 1 if >= 1, else 0.
DenseVector binary_project(const DenseVector& a);

// Set operations on binary vectors; throw Errc::NotBinary otherwise.
DenseVector set_intersection(const DenseVector& a, const DenseVector& b);
DenseVector set_union(const DenseVector& a, const DenseVector& b);
DenseVector set_difference(const DenseVector& a, const DenseVector& b);

// Restriction to states with e_i = 1 (Upper) or e_i = 0 (Lower). Throws
// Errc::UniverseTooSmall for ids outside 1..n (as does free_by_definition).
DenseVector mask(const DenseVector& a, VarId i, Polarity polarity);

// All 2^n t-objects fixing every event in 1..n.
std::vector<TObject> pure_state_basis(std::size_t n, std::size_t cap = kDefaultCap);

// All 2^|ids| t-objects fixing exactly the events in `ids`.
std::vector<TObject> constrained_pure_states(const IndexSet& ids, std::size_t cap = kDefaultCap);

// True iff flipping e_i maps the state set onto itself. Throws NotBinary.
bool free_by_definition(const DenseVector& a, VarId i);

// One line per coordinate: "<e1 e2 ... en> <value>", e.g. "101 -2".
std::string dump(const DenseVector& a);

std::ostream& operator<<(std::ostream& os, const DenseVector& a);

}  // namespace stalg::dense
