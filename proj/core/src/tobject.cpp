#include "stalg/tobject.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "stalg/error.hpp"

namespace stalg {
namespace {

void normalize(IndexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool contains(const IndexSet& s, VarId i) {
  return std::binary_search(s.begin(), s.end(), i);
}

bool intersects(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

bool includes(const IndexSet& super, const IndexSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet inserted(const IndexSet& s, VarId i) {
  IndexSet out = s;
  auto pos = std::lower_bound(out.begin(), out.end(), i);
  if (pos == out.end() || *pos != i) out.insert(pos, i);
  return out;
}

IndexSet erased(const IndexSet& s, VarId i) {
  IndexSet out = s;
  auto pos = std::lower_bound(out.begin(), out.end(), i);
  if (pos != out.end() && *pos == i) out.erase(pos);
  return out;
}

void require_non_null(const TObject& t, const char* op) {
  if (t.is_null()) throw Error(Errc::InvalidArgument, std::string(op) + ": Null operand");
}

}  // namespace

TObject TObject::null() { return TObject({}, {}, true); }

TObject TObject::make(IndexSet upper, IndexSet lower) {
  normalize(upper);
  normalize(lower);
  if (intersects(upper, lower)) return null();
  return TObject(std::move(upper), std::move(lower), false);
}

TObject TObject::upper_of(VarId i) { return TObject({i}, {}, false); }
TObject TObject::lower_of(VarId i) { return TObject({}, {i}, false); }

VarId TObject::max_var() const noexcept {
  VarId m = 0;
  if (!upper_.empty()) m = upper_.back();
  if (!lower_.empty()) m = std::max(m, lower_.back());
  return m;
}

bool TObject::has_upper(VarId i) const noexcept { return contains(upper_, i); }
bool TObject::has_lower(VarId i) const noexcept { return contains(lower_, i); }

TObject TObject::with_upper(VarId i) const {
  if (null_) return *this;
  return TObject(inserted(upper_, i), erased(lower_, i), false);
}

TObject TObject::with_lower(VarId i) const {
  if (null_) return *this;
  return TObject(erased(upper_, i), inserted(lower_, i), false);
}

TObject TObject::without(VarId i) const {
  if (null_) return *this;
  return TObject(erased(upper_, i), erased(lower_, i), false);
}

std::size_t TObject::hash() const noexcept {
  // FNV-style mix; the separator keeps t^{1}_{} and t^{}_{1} apart.
  std::size_t h = null_ ? 0x9e3779b97f4a7c15ULL : 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (VarId i : upper_) mix(i);
  mix(0xffffffffULL);
  for (VarId i : lower_) mix(i);
  return h;
}

std::strong_ordering operator<=>(const TObject& a, const TObject& b) {
  if (a.null_ != b.null_) return a.null_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
  return a.lower_ <=> b.lower_;
}

TObject multiply(const TObject& a, const TObject& b) {
  if (a.null_ || b.null_) return TObject::null();
  if (intersects(a.upper_, b.lower_) || intersects(b.upper_, a.lower_)) return TObject::null();
  return TObject(set_union(a.upper_, b.upper_), set_union(a.lower_, b.lower_), false);
}

std::pair<TObject, TObject> decompose(const TObject& a, VarId i) {
  require_non_null(a, "decompose");
  if (a.fixes(i)) {
    throw Error(Errc::IndexAlreadyFixed, "index " + std::to_string(i) + " is already fixed in " +
                                             to_compact_string(a));
  }
  return {a.with_upper(i), a.with_lower(i)};
}

bool is_subset(const TObject& a, const TObject& b) {
  require_non_null(a, "is_subset");
  require_non_null(b, "is_subset");
  return includes(a.upper(), b.upper()) && includes(a.lower(), b.lower());
}

bool is_orthogonal(const TObject& a, const TObject& b) { return multiply(a, b).is_null(); }

OrthoSplit orthogonalize(const TObject& a, const TObject& b) {
  require_non_null(a, "orthogonalize");
  require_non_null(b, "orthogonalize");
  OrthoSplit split;
  split.parallel = multiply(a, b);
  if (split.parallel.is_null()) {
    split.perpendicular.push_back(a);
    return split;
  }
  const IndexSet gamma = set_difference(b.upper(), a.upper());
  const IndexSet nu = set_difference(b.lower(), a.lower());
  split.perpendicular.reserve(gamma.size() + nu.size());
  // `agreed` accumulates a plus the difference indices already fixed as in b.
  TObject agreed = a;
  for (VarId i : nu) {
    split.perpendicular.push_back(agreed.with_upper(i));
    agreed = agreed.with_lower(i);
  }
  for (VarId i : gamma) {
    split.perpendicular.push_back(agreed.with_lower(i));
    agreed = agreed.with_upper(i);
  }
  return split;
}

std::vector<TObject> subtract(const TObject& a, const TObject& b) {
  return orthogonalize(a, b).perpendicular;
}

std::string to_row_string(const TObject& t, std::size_t width) {
  if (t.is_null()) throw Error(Errc::InvalidArgument, "Null has no row form");
  if (t.max_var() > width) {
    throw Error(Errc::UniverseTooSmall, "row " + to_compact_string(t) + " does not fit in " +
                                            std::to_string(width) + " columns");
  }
  std::string row(width, '-');
  for (VarId i : t.upper()) row[i - 1] = '1';
  for (VarId i : t.lower()) row[i - 1] = '0';
  return row;
}

TObject parse_row(std::string_view text) {
  IndexSet upper;
  IndexSet lower;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const auto id = static_cast<VarId>(k + 1);
    switch (text[k]) {
      case '1': upper.push_back(id); break;
      case '0': lower.push_back(id); break;
      case '-': break;
      default:
        throw ParseError(1, k + 1, std::string("unexpected character '") + text[k] + "' in row");
    }
  }
  return TObject::make(std::move(upper), std::move(lower));
}

namespace {

void append_ids(std::string& out, const IndexSet& s) {
  out += '{';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s[k]);
  }
  out += '}';
}

// Parses "{1,2,3}" starting at pos; advances pos past the closing brace.
IndexSet parse_braced(std::string_view text, std::size_t& pos) {
  IndexSet ids;
  if (pos >= text.size() || text[pos] != '{') throw ParseError(1, pos + 1, "expected '{'");
  ++pos;
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return ids;
  }
  while (true) {
    VarId id = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), id);
    if (ec != std::errc() || id == 0) throw ParseError(1, pos + 1, "expected positive event id");
    pos = static_cast<std::size_t>(ptr - text.data());
    ids.push_back(id);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      break;
    }
    throw ParseError(1, pos + 1, "expected ',' or '}'");
  }
  return ids;
}

}  // namespace

std::string to_compact_string(const TObject& t) {
  if (t.is_null()) return "0";
  std::string out = "t";
  if (!t.upper().empty()) {
    out += '^';
    append_ids(out, t.upper());
  }
  if (!t.lower().empty()) {
    out += '_';
    append_ids(out, t.lower());
  }
  return out;
}

TObject parse_compact(std::string_view text) {
  if (text == "0") return TObject::null();
  if (text.empty() || text[0] != 't') throw ParseError(1, 1, "expected 't' or '0'");
  std::size_t pos = 1;
  IndexSet upper;
  IndexSet lower;
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    upper = parse_braced(text, pos);
  }
  if (pos < text.size() && text[pos] == '_') {
    ++pos;
    lower = parse_braced(text, pos);
  }
  if (pos != text.size()) throw ParseError(1, pos + 1, "trailing characters after t-object");
  return TObject::make(std::move(upper), std::move(lower));
}

std::ostream& operator<<(std::ostream& os, const TObject& t) { return os << to_compact_string(t); }

}  // namespace stalg
