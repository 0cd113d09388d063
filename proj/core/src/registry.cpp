#include <charconv>

#include "stalg/error.hpp"
#include "stalg/formula.hpp"

namespace stalg {
namespace {

// k for names "E<k>" with k >= 1 and no leading zero.
std::optional<VarId> numbered_event(std::string_view name) {
  if (name.size() < 2 || name[0] != 'E' || name[1] == '0') return std::nullopt;
  VarId k = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  return k;
}

}  // namespace

VarId VariableRegistry::push(std::string name, VarKind kind) {
  const auto id = static_cast<VarId>(names_.size() + 1);
  ids_.emplace(name, id);
  names_.push_back(std::move(name));
  kinds_.push_back(kind);
  return id;
}

VarId VariableRegistry::intern(std::string_view name) {
  if (auto id = find(name)) return *id;
  if (auto k = numbered_event(name)) {
    if (*k <= size()) {
      throw Error(Errc::InvalidArgument, std::string(name) + " collides with '" +
                                             names_[*k - 1] + "', which already holds id " +
                                             std::to_string(*k));
    }
    ensure(*k);
    return *k;
  }
  return push(std::string(name), VarKind::User);
}

std::optional<VarId> VariableRegistry::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void VariableRegistry::ensure(std::size_t n) {
  while (size() < n) {
    const std::string name = "E" + std::to_string(size() + 1);
    if (ids_.contains(name)) {
      throw Error(Errc::InvalidArgument, name + " is already bound to another id");
    }
    push(name, VarKind::User);
  }
}

VarId VariableRegistry::allocate(VarKind kind) {
  const std::string prefix = kind == VarKind::Indicator ? "$k" : kind == VarKind::Supplementary ? "$s" : "E";
  return push(prefix + std::to_string(size() + 1), kind);
}

const std::string& VariableRegistry::name(VarId id) const {
  if (id == 0 || id > size()) throw Error(Errc::UnknownVariable, "id " + std::to_string(id));
  return names_[id - 1];
}

VarKind VariableRegistry::kind(VarId id) const {
  if (id == 0 || id > size()) throw Error(Errc::UnknownVariable, "id " + std::to_string(id));
  return kinds_[id - 1];
}

std::size_t VariableRegistry::user_count() const noexcept {
  std::size_t n = 0;
  for (auto k : kinds_) n += k == VarKind::User;
  return n;
}

IndexSet VariableRegistry::hidden() const {
  IndexSet out;
  for (std::size_t k = 0; k < kinds_.size(); ++k) {
    if (kinds_[k] != VarKind::User) out.push_back(static_cast<VarId>(k + 1));
  }
  return out;
}

}  // namespace stalg
