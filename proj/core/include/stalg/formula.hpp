#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stalg/tobject.hpp"

namespace stalg {

enum class Op { Var, Not, And, Or, Implies, Iff, Xor, True, False };

/// Propositional formula tree. And, Or and Xor are n-ary; Xor is parity.
/// Implies and Iff take exactly two arguments, Not exactly one.
struct Formula {
  Op op = Op::True;
  VarId var = 0;
  std::vector<Formula> args;

  static Formula variable(VarId id);
  static Formula constant(bool value);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula exclusive_or(std::vector<Formula> fs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  // Var, or Not of a Var.
  bool is_literal() const noexcept;
  bool is_constant() const noexcept { return op == Op::True || op == Op::False; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

// Value of f where values[i] is e_i. Ids beyond values.size() read as 0.
bool evaluate(const Formula& f, const std::vector<bool>& values);

// Sorted ids occurring in f.
IndexSet variables(const Formula& f);

// Literals and constants have depth 0; each operator adds one.
std::size_t depth(const Formula& f);

enum class VarKind { User, Supplementary, Indicator };

/// Interns event names to dense ids 1..N.
///
/// A name of the form "E<k>" always maps to id k; registering it fills any
/// gap below k with user events named "E<j>". Other identifiers take the next
/// free id. Supplementary and indicator events get the names "$s<id>" and
/// "$k<id>", which the DSL cannot spell.
class VariableRegistry {
 public:
  // Throws Errc::InvalidArgument when an "E<k>" name collides with an id
  // already held by a different name.
  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;

  // Registers E1..En as user events where still missing.
  void ensure(std::size_t n);
  VarId allocate(VarKind kind);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(VarId id) const;
  VarKind kind(VarId id) const;

  std::size_t user_count() const noexcept;
  // Supplementary and indicator ids.
  IndexSet hidden() const;

 private:
  VarId push(std::string name, VarKind kind);

  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::unordered_map<std::string, VarId> ids_;
};

// Infix text using the DSL operators; names from `registry` when given,
// otherwise "E<k>".
std::string to_string(const Formula& f, const VariableRegistry* registry = nullptr);

}  // namespace stalg
