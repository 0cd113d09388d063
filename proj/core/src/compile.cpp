#include "stalg/compile.hpp"

#include <algorithm>
#include <map>

#include "stalg/error.hpp"
#include "stalg/reduction.hpp"

namespace stalg {
namespace {

StateVector finish(std::vector<TObject> rows, const VariableOrder& order, bool canonical) {
  StateVector s = canonicalize(StateVector::from_terms(std::move(rows)), order);
  if (canonical) return s;
  return reduce_heuristic(s).first;
}

}  // namespace

CompiledFormula compile(const Formula& f, const CompileOptions& options) {
  const IndexSet vars = variables(f);
  if (vars.size() > options.cap) {
    throw Error(Errc::CompileCapExceeded,
                "formula mentions " + std::to_string(vars.size()) +
                    " variables, compile cap is " + std::to_string(options.cap));
  }
  const std::size_t n = vars.size();
  std::vector<bool> values(n == 0 ? 1 : vars.back() + 1, false);
  std::vector<TObject> sat;
  std::vector<TObject> unsat;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    IndexSet upper;
    IndexSet lower;
    for (std::size_t k = 0; k < n; ++k) {
      const bool bit = (a >> (n - 1 - k)) & 1;
      values[vars[k]] = bit;
      (bit ? upper : lower).push_back(vars[k]);
    }
    TObject row = TObject::make(std::move(upper), std::move(lower));
    if (evaluate(f, values)) {
      sat.push_back(std::move(row));
    } else if (options.with_info) {
      unsat.push_back(std::move(row));
    }
  }

  const VariableOrder order(vars);
  CompiledFormula out;
  out.formula = f;
  out.valid = finish(std::move(sat), order, options.canonical);
  if (options.with_info) out.info = finish(std::move(unsat), order, options.canonical);
  return out;
}

TObject compile_clause_info(const Formula& clause) {
  if (clause.op == Op::False) return TObject::unit();
  std::vector<const Formula*> literals;
  if (clause.is_literal()) {
    literals.push_back(&clause);
  } else if (clause.op == Op::Or) {
    for (const auto& g : clause.args) {
      if (!g.is_literal()) throw Error(Errc::NotAClause, "operand is not a literal: " + to_string(g));
      literals.push_back(&g);
    }
  } else {
    throw Error(Errc::NotAClause, to_string(clause));
  }
  IndexSet upper;
  IndexSet lower;
  for (const Formula* lit : literals) {
    if (lit->op == Op::Var) {
      lower.push_back(lit->var);
    } else {
      upper.push_back(lit->args[0].var);
    }
  }
  return TObject::make(std::move(upper), std::move(lower));
}

CompiledFormula extend(const Formula& f, VarId k, const CompileOptions& options) {
  const IndexSet vars = variables(f);
  if (std::binary_search(vars.begin(), vars.end(), k)) {
    throw Error(Errc::IndicatorCollision, "E" + std::to_string(k) + " occurs in " + to_string(f));
  }
  CompiledFormula out = compile(Formula::iff(Formula::variable(k), f), options);
  out.formula = f;
  out.indicator = k;
  return out;
}

namespace {

class Splitter {
 public:
  Splitter(VariableRegistry& registry, const DecomposeOptions& options)
      : registry_(registry), options_(options) {}

  SplitFormula run(const Formula& f) {
    Formula residual = lower(f, 0);
    SplitFormula out;
    out.parts = std::move(definitions_);
    out.parts.push_back(std::move(residual));
    out.supplementary = std::move(introduced_);
    return out;
  }

 private:
  Formula lower(const Formula& node, std::size_t level) {
    if (node.is_literal() || node.is_constant()) return node;
    if (level >= options_.max_depth) return define(node);
    Formula out{node.op, node.var, {}};
    out.args.reserve(node.args.size());
    for (const auto& g : node.args) out.args.push_back(lower(g, level + 1));
    return narrow(std::move(out));
  }

  // Chunks wide associative nodes into supplementary events.
  Formula narrow(Formula node) {
    const bool associative = node.op == Op::And || node.op == Op::Or || node.op == Op::Xor;
    const std::size_t width = std::max<std::size_t>(options_.max_arity, 2);
    while (associative && node.args.size() > width) {
      std::vector<Formula> next;
      for (std::size_t k = 0; k < node.args.size(); k += width) {
        const std::size_t end = std::min(node.args.size(), k + width);
        if (end - k == 1) {
          next.push_back(std::move(node.args[k]));
          continue;
        }
        Formula chunk{node.op, 0, {}};
        for (std::size_t j = k; j < end; ++j) chunk.args.push_back(std::move(node.args[j]));
        next.push_back(bind(std::move(chunk)));
      }
      node.args = std::move(next);
    }
    return node;
  }

  Formula define(const Formula& node) {
    const std::string key = to_string(node);
    if (auto it = memo_.find(key); it != memo_.end()) return Formula::variable(it->second);
    Formula body = lower(node, 0);
    const VarId s = registry_.allocate(VarKind::Supplementary);
    memo_.emplace(key, s);
    introduced_.push_back(s);
    definitions_.push_back(Formula::iff(Formula::variable(s), std::move(body)));
    return Formula::variable(s);
  }

  // Names an already-lowered node.
  Formula bind(Formula node) {
    const std::string key = to_string(node);
    if (auto it = memo_.find(key); it != memo_.end()) return Formula::variable(it->second);
    const VarId s = registry_.allocate(VarKind::Supplementary);
    memo_.emplace(key, s);
    introduced_.push_back(s);
    definitions_.push_back(Formula::iff(Formula::variable(s), std::move(node)));
    return Formula::variable(s);
  }

  VariableRegistry& registry_;
  DecomposeOptions options_;
  std::map<std::string, VarId> memo_;
  std::vector<Formula> definitions_;
  IndexSet introduced_;
};

}  // namespace

SplitFormula split_with_supplementaries(const Formula& f, VariableRegistry& registry,
                                        const DecomposeOptions& options) {
  return Splitter(registry, options).run(f);
}

std::vector<CompiledFormula> decompose_with_supplementaries(const Formula& f,
                                                            VariableRegistry& registry,
                                                            const DecomposeOptions& decompose,
                                                            const CompileOptions& options) {
  SplitFormula split = split_with_supplementaries(f, registry, decompose);
  IndexSet supplementary = split.supplementary;
  std::vector<CompiledFormula> out;
  DecomposeOptions tight = decompose;
  tight.max_depth = 1;
  tight.max_arity = std::min(decompose.max_arity, options.cap > 2 ? options.cap - 1 : 2);
  for (auto& part : split.parts) {
    if (variables(part).size() <= options.cap) {
      out.push_back(compile(part, options));
      continue;
    }
    SplitFormula again = split_with_supplementaries(part, registry, tight);
    supplementary.insert(supplementary.end(), again.supplementary.begin(),
                         again.supplementary.end());
    for (auto& sub : again.parts) out.push_back(compile(sub, options));
  }
  std::sort(supplementary.begin(), supplementary.end());
  for (auto& c : out) c.supplementary = supplementary;
  return out;
}

}  // namespace stalg
