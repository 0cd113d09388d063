#include "stalg/dense.hpp"

#include <ostream>

#include "stalg/error.hpp"

namespace stalg::dense {
namespace {

void require_same(const DenseVector& a, const DenseVector& b) {
  if (a.universe() != b.universe()) {
    throw Error(Errc::UniverseMismatch, std::to_string(a.universe()) + " vs " +
                                            std::to_string(b.universe()) + " events");
  }
}

void require_binary(const DenseVector& a) {
  if (!a.is_binary()) throw Error(Errc::NotBinary, "set operation on a non-binary vector");
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n >= 63) {
    throw Error(Errc::UniverseTooLarge,
                std::to_string(n) + " events exceeds oracle cap " + std::to_string(cap));
  }
}

template <typename Fn>
DenseVector zip(const DenseVector& a, const DenseVector& b, Fn&& fn) {
  require_same(a, b);
  DenseVector out = a;
  for (std::size_t k = 0; k < out.dimension(); ++k) out[k] = fn(a[k], b[k]);
  return out;
}

void require_column(const DenseVector& a, VarId i) {
  if (i == 0 || i > a.universe()) {
    throw Error(Errc::UniverseTooSmall, "E" + std::to_string(i) + " is outside " +
                                            std::to_string(a.universe()) + " events");
  }
}

void accumulate(DenseVector& out, const TObject& t, std::int64_t weight) {
  if (t.is_null()) return;
  const std::size_t n = out.universe();
  if (t.max_var() > n) {
    throw Error(Errc::UniverseTooSmall, "row " + to_compact_string(t) + " exceeds " +
                                            std::to_string(n) + " events");
  }
  std::uint64_t fixed_ones = 0;
  std::uint64_t fixed_mask = 0;
  for (VarId i : t.upper()) {
    fixed_ones |= state_bit(i, n);
    fixed_mask |= state_bit(i, n);
  }
  for (VarId i : t.lower()) fixed_mask |= state_bit(i, n);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  const std::uint64_t free_mask = all & ~fixed_mask;
  // Enumerate every subset of the hole columns.
  std::uint64_t sub = 0;
  do {
    out[fixed_ones | sub] += weight;
    sub = (sub - free_mask) & free_mask;
  } while (sub != 0);
}

}  // namespace

DenseVector::DenseVector(std::size_t n, std::size_t cap) : n_(n) {
  require_cap(n, cap);
  coords_.assign(std::size_t{1} << n, 0);
}

DenseVector DenseVector::ones(std::size_t n, std::size_t cap) {
  DenseVector v(n, cap);
  for (auto& c : v.coords_) c = 1;
  return v;
}

bool DenseVector::is_zero() const noexcept {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool DenseVector::is_binary() const noexcept {
  for (auto c : coords_) {
    if (c != 0 && c != 1) return false;
  }
  return true;
}

std::size_t DenseVector::popcount() const noexcept {
  std::size_t count = 0;
  for (auto c : coords_) count += c != 0;
  return count;
}

DenseVector expand(const StateVector& s, std::size_t n, std::size_t cap) {
  DenseVector out(n, cap);
  for (const Row& r : s.rows()) accumulate(out, r.term, static_cast<std::int64_t>(r.mult));
  return out;
}

DenseVector expand(const TObject& t, std::size_t n, std::size_t cap) {
  DenseVector out(n, cap);
  accumulate(out, t, 1);
  return out;
}

DenseVector add(const DenseVector& a, const DenseVector& b) {
  return zip(a, b, [](auto x, auto y) { return x + y; });
}

DenseVector sub(const DenseVector& a, const DenseVector& b) {
  return zip(a, b, [](auto x, auto y) { return x - y; });
}

DenseVector mul(const DenseVector& a, const DenseVector& b) {
  return zip(a, b, [](auto x, auto y) { return x * y; });
}

DenseVector scale(const DenseVector& a, std::int64_t c) {
  DenseVector out = a;
  for (std::size_t k = 0; k < out.dimension(); ++k) out[k] *= c;
  return out;
}

DenseVector binary_project(const DenseVector& a) {
  DenseVector out = a;
  for (std::size_t k = 0; k < out.dimension(); ++k) out[k] = out[k] >= 1 ? 1 : 0;
  return out;
}

DenseVector set_intersection(const DenseVector& a, const DenseVector& b) {
  require_binary(a);
  require_binary(b);
  return mul(a, b);
}

DenseVector set_union(const DenseVector& a, const DenseVector& b) {
  require_binary(a);
  require_binary(b);
  return sub(add(a, b), mul(a, b));
}

DenseVector set_difference(const DenseVector& a, const DenseVector& b) {
  require_binary(a);
  require_binary(b);
  return sub(a, mul(a, b));
}

DenseVector mask(const DenseVector& a, VarId i, Polarity polarity) {
  require_column(a, i);
  DenseVector out = a;
  const std::uint64_t bit = state_bit(i, a.universe());
  for (std::size_t k = 0; k < out.dimension(); ++k) {
    const bool one = (k & bit) != 0;
    if (one != (polarity == Polarity::Upper)) out[k] = 0;
  }
  return out;
}

std::vector<TObject> constrained_pure_states(const IndexSet& ids, std::size_t cap) {
  require_cap(ids.size(), cap);
  std::vector<TObject> out;
  out.reserve(std::size_t{1} << ids.size());
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << ids.size()); ++k) {
    IndexSet upper;
    IndexSet lower;
    for (std::size_t b = 0; b < ids.size(); ++b) {
      ((k >> b) & 1 ? upper : lower).push_back(ids[b]);
    }
    out.push_back(TObject::make(std::move(upper), std::move(lower)));
  }
  return out;
}

std::vector<TObject> pure_state_basis(std::size_t n, std::size_t cap) {
  IndexSet ids(n);
  for (std::size_t k = 0; k < n; ++k) ids[k] = static_cast<VarId>(k + 1);
  return constrained_pure_states(ids, cap);
}

bool free_by_definition(const DenseVector& a, VarId i) {
  require_binary(a);
  require_column(a, i);
  const std::uint64_t bit = state_bit(i, a.universe());
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    if (a[k] != a[k ^ bit]) return false;
  }
  return true;
}

std::string dump(const DenseVector& a) {
  std::string out;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    for (VarId i = 1; i <= a.universe(); ++i) out += (k & state_bit(i, a.universe())) ? '1' : '0';
    out += ' ';
    out += std::to_string(a[k]);
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DenseVector& a) {
  os << '(';
  for (std::size_t k = 0; k < a.dimension(); ++k) os << (k ? " " : "") << a[k];
  return os << ')';
}

}  // namespace stalg::dense
