#include "stalg/formula.hpp"

#include <algorithm>

namespace stalg {

Formula Formula::variable(VarId id) { return Formula{Op::Var, id, {}}; }
Formula Formula::constant(bool value) { return Formula{value ? Op::True : Op::False, 0, {}}; }
Formula Formula::negation(Formula f) { return Formula{Op::Not, 0, {std::move(f)}}; }
Formula Formula::conjunction(std::vector<Formula> fs) { return Formula{Op::And, 0, std::move(fs)}; }
Formula Formula::disjunction(std::vector<Formula> fs) { return Formula{Op::Or, 0, std::move(fs)}; }
Formula Formula::exclusive_or(std::vector<Formula> fs) { return Formula{Op::Xor, 0, std::move(fs)}; }

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula{Op::Implies, 0, {std::move(lhs), std::move(rhs)}};
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return Formula{Op::Iff, 0, {std::move(lhs), std::move(rhs)}};
}

bool Formula::is_literal() const noexcept {
  return op == Op::Var || (op == Op::Not && args.size() == 1 && args[0].op == Op::Var);
}

bool evaluate(const Formula& f, const std::vector<bool>& values) {
  switch (f.op) {
    case Op::Var: return f.var < values.size() && values[f.var];
    case Op::True: return true;
    case Op::False: return false;
    case Op::Not: return !evaluate(f.args[0], values);
    case Op::And:
      return std::all_of(f.args.begin(), f.args.end(),
                         [&](const Formula& g) { return evaluate(g, values); });
    case Op::Or:
      return std::any_of(f.args.begin(), f.args.end(),
                         [&](const Formula& g) { return evaluate(g, values); });
    case Op::Xor: {
      bool parity = false;
      for (const auto& g : f.args) parity ^= evaluate(g, values);
      return parity;
    }
    case Op::Implies: return !evaluate(f.args[0], values) || evaluate(f.args[1], values);
    case Op::Iff: return evaluate(f.args[0], values) == evaluate(f.args[1], values);
  }
  return false;
}

namespace {

void collect(const Formula& f, IndexSet& out) {
  if (f.op == Op::Var) out.push_back(f.var);
  for (const auto& g : f.args) collect(g, out);
}

int precedence(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::Xor: return 4;
    case Op::And: return 5;
    case Op::Not: return 6;
    default: return 7;
  }
}

void print(const Formula& f, const VariableRegistry* registry, std::string& out, int parent) {
  const int mine = precedence(f.op);
  const bool paren = mine <= parent && mine < 6;
  if (paren) out += '(';
  auto join = [&](const char* sep) {
    for (std::size_t k = 0; k < f.args.size(); ++k) {
      if (k) out += sep;
      print(f.args[k], registry, out, mine);
    }
  };
  switch (f.op) {
    case Op::Var:
      out += registry && f.var <= registry->size() ? registry->name(f.var)
                                                    : "E" + std::to_string(f.var);
      break;
    case Op::True: out += "true"; break;
    case Op::False: out += "false"; break;
    case Op::Not:
      out += '!';
      print(f.args[0], registry, out, mine);
      break;
    case Op::And:
      if (f.args.empty()) out += "true";
      join(" & ");
      break;
    case Op::Or:
      if (f.args.empty()) out += "false";
      join(" | ");
      break;
    case Op::Xor:
      if (f.args.empty()) out += "false";
      join(" ^ ");
      break;
    case Op::Implies: join(" -> "); break;
    case Op::Iff: join(" <-> "); break;
  }
  if (paren) out += ')';
}

}  // namespace

IndexSet variables(const Formula& f) {
  IndexSet out;
  collect(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t depth(const Formula& f) {
  if (f.is_literal() || f.is_constant()) return 0;
  std::size_t d = 0;
  for (const auto& g : f.args) d = std::max(d, depth(g));
  return d + 1;
}

std::string to_string(const Formula& f, const VariableRegistry* registry) {
  std::string out;
  print(f, registry, out, 0);
  return out;
}

}  // namespace stalg
