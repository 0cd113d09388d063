#include "stalg/inference.hpp"

#include <algorithm>

#include "json.hpp"

#include "stalg/error.hpp"

namespace stalg {
namespace {

void register_variables(VariableRegistry& registry, const Formula& f) {
  const IndexSet vars = variables(f);
  if (!vars.empty()) registry.ensure(vars.back());
}

StateVector simplify(const StateVector& s, bool preserve_multiplicity, ReductionStats* stats) {
  auto [reduced, st] = reduce_heuristic(s);
  if (stats) *stats = st;
  return preserve_multiplicity ? reduced : absorb_subsumed(reduced);
}

TObject strip_hidden(TObject row, const IndexSet& hidden) {
  for (VarId i : hidden) {
    if (row.fixes(i)) row = row.without(i);
  }
  return row;
}

std::vector<std::size_t> fold_order(const KnowledgeBase& kb, bool clustering) {
  const auto& fs = kb.formulas();
  std::vector<std::size_t> order;
  order.reserve(fs.size());
  if (!clustering) {
    for (std::size_t k = 0; k < fs.size(); ++k) order.push_back(k);
    return order;
  }
  std::vector<IndexSet> pivots;
  pivots.reserve(fs.size());
  for (const auto& c : fs) pivots.push_back(pivot(c.valid));
  std::vector<bool> used(fs.size(), false);
  IndexSet seen;
  for (std::size_t round = 0; round < fs.size(); ++round) {
    std::size_t best = fs.size();
    std::size_t best_overlap = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (used[k]) continue;
      IndexSet common;
      std::set_intersection(pivots[k].begin(), pivots[k].end(), seen.begin(), seen.end(),
                            std::back_inserter(common));
      if (best == fs.size() || common.size() > best_overlap) {
        best = k;
        best_overlap = common.size();
      }
    }
    used[best] = true;
    order.push_back(best);
    IndexSet merged;
    std::set_union(seen.begin(), seen.end(), pivots[best].begin(), pivots[best].end(),
                   std::back_inserter(merged));
    seen = std::move(merged);
  }
  return order;
}

// Product of the valid vectors of f, split with supplementary events as the
// base's options dictate. New events land in kb's registry.
StateVector target_vector(KnowledgeBase& kb, const Formula& f) {
  KnowledgeBase scratch(kb.options());
  scratch.registry() = kb.registry();
  scratch.add(f);
  kb.registry() = scratch.registry();
  StateVector acc = StateVector::trivial();
  for (const auto& c : scratch.formulas()) acc = simplify(multiply(acc, c.valid), false, nullptr);
  return acc;
}

}  // namespace

KnowledgeBase::KnowledgeBase(KnowledgeBaseOptions options) : options_(std::move(options)) {
  options_.compile.with_info = true;
}

std::size_t KnowledgeBase::add(const Formula& f) {
  register_variables(registry_, f);
  const std::size_t width = variables(f).size();
  const bool split =
      options_.decomposition == DecompositionMode::Always ||
      (options_.decomposition == DecompositionMode::Auto && width > options_.compile.cap);
  if (!split) {
    formulas_.push_back(compile(f, options_.compile));
    return 1;
  }
  auto parts = decompose_with_supplementaries(f, registry_, options_.decompose, options_.compile);
  const std::size_t n = parts.size();
  for (auto& p : parts) formulas_.push_back(std::move(p));
  return n;
}

void KnowledgeBase::add_compiled(CompiledFormula c) {
  VarId top = std::max(c.valid.max_var(), c.info ? c.info->max_var() : VarId{0});
  for (VarId i : variables(c.formula)) top = std::max(top, i);
  registry_.ensure(top);
  formulas_.push_back(std::move(c));
}

std::size_t KnowledgeBase::add_text(std::string_view text, UnknownVariables policy) {
  const auto formulas = parse_program(text, registry_, policy);
  for (const auto& f : formulas) add(f);
  return formulas.size();
}

DimacsResult KnowledgeBase::add_dimacs(std::string_view text, const DimacsOptions& options) {
  DimacsResult parsed = parse_dimacs(text, registry_, options);
  for (const auto& clause : parsed.clauses) add(clause);
  return parsed;
}

ValidSetTrace valid_set(const KnowledgeBase& kb, const ValidSetOptions& options) {
  ValidSetTrace trace;
  StateVector acc = StateVector::trivial();
  const auto order = fold_order(kb, options.pivot_clustering);
  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t idx = order[step];
    FoldStep record;
    record.step = step + 1;
    record.formula_index = idx;
    StateVector product = multiply(acc, kb.formulas()[idx].valid, &record.counters, options.exec);
    acc = simplify(product, options.preserve_multiplicity, &record.reduction);
    record.rows = acc.size();
    trace.counters += record.counters;
    if (options.trace) trace.intermediates.push_back(record);
    if (options.keep_partials) trace.partials.push_back(acc);
    if (acc.empty()) {
      trace.early_exit = step + 1 < order.size();
      break;
    }
  }
  trace.result = std::move(acc);
  return trace;
}

StreamResult valid_set_stream(const std::function<std::optional<StateVector>()>& next,
                              std::size_t budget) {
  StreamResult out;
  out.result = StateVector::trivial();
  while (out.steps < budget) {
    std::optional<StateVector> s = next();
    if (!s) return out;
    out.result = simplify(multiply(out.result, *s), false, nullptr);
    ++out.steps;
    if (out.result.empty()) {
      out.empty = true;
      return out;
    }
  }
  out.budget_exhausted = true;
  return out;
}

StateVector information_set(const KnowledgeBase& kb) {
  StateVector acc;
  for (const auto& c : kb.formulas()) {
    const StateVector info = c.info ? *c.info : complement(c.valid, kb.universe());
    acc = add(acc, subtract_set(info, acc));
  }
  return reduce_heuristic(acc).first;
}

QueryVerdict query(const KnowledgeBase& kb, const Formula& target, Strategy strategy,
                   const ValidSetOptions& options) {
  QueryVerdict out;
  out.strategy = strategy;
  KnowledgeBase work = kb;
  register_variables(work.registry(), target);

  switch (strategy) {
    case Strategy::Indicator: {
      const VarId k = work.registry().allocate(VarKind::Indicator);
      work.add(Formula::iff(Formula::variable(k), target));
      out.trace = valid_set(work, options);
      const StateVector& v = out.trace.result;
      switch (event_status(v, k)) {
        case EventStatus::IdenticallyTrue: out.verdict = Verdict::Entailed; break;
        case EventStatus::IdenticallyFalse: out.verdict = Verdict::Refuted; break;
        case EventStatus::Indefinite: out.verdict = Verdict::Contingent; break;
        case EventStatus::EmptySpace: out.verdict = Verdict::PremiseUnsatisfiable; break;
      }
      if (out.verdict == Verdict::Contingent) {
        out.witness = subvector(v, k, Polarity::Lower).rows().front().term;
      } else if (!v.empty()) {
        out.witness = v.rows().front().term;
      }
      break;
    }
    case Strategy::ValidIntersect: {
      const StateVector q = target_vector(work, target);
      const StateVector q_hat = target_vector(work, Formula::negation(target));
      out.trace = valid_set(kb, options);
      const StateVector& v = out.trace.result;
      const StateVector against = multiply(v, q_hat, &out.trace.counters, options.exec);
      const StateVector for_ = multiply(v, q, &out.trace.counters, options.exec);
      if (v.empty()) {
        out.verdict = Verdict::PremiseUnsatisfiable;
      } else if (against.empty()) {
        out.verdict = Verdict::Entailed;
        out.witness = for_.rows().front().term;
      } else if (for_.empty()) {
        out.verdict = Verdict::Refuted;
        out.witness = against.rows().front().term;
      } else {
        out.verdict = Verdict::Contingent;
        out.witness = against.rows().front().term;
      }
      break;
    }
    case Strategy::InfoCount: {
      const StateVector q = target_vector(work, target);
      const StateVector q_hat = target_vector(work, Formula::negation(target));
      const std::size_t n = work.universe();
      const StateVector info = information_set(kb);
      const Count everything = Count(1) << n;
      if (cardinality(info, n) == everything) {
        out.verdict = Verdict::PremiseUnsatisfiable;
      } else if (cardinality(multiply(info, q_hat), n) == cardinality(q_hat, n)) {
        out.verdict = Verdict::Entailed;
      } else if (cardinality(multiply(info, q), n) == cardinality(q, n)) {
        out.verdict = Verdict::Refuted;
      } else {
        out.verdict = Verdict::Contingent;
        out.witness = subtract_set(q_hat, info).rows().front().term;
      }
      break;
    }
  }
  if (out.witness) out.witness = strip_hidden(*out.witness, work.hidden_events());
  return out;
}

bool equivalent_formulas(const KnowledgeBase& kb, const Formula& f, const Formula& g) {
  KnowledgeBase work = kb;
  register_variables(work.registry(), f);
  register_variables(work.registry(), g);
  const VarId kf = work.registry().allocate(VarKind::Indicator);
  work.add(Formula::iff(Formula::variable(kf), f));
  const VarId kg = work.registry().allocate(VarKind::Indicator);
  work.add(Formula::iff(Formula::variable(kg), g));
  const StateVector v = valid_set(work).result;
  return multiply(v, StateVector{TObject::make({kf}, {kg})}).empty() &&
         multiply(v, StateVector{TObject::make({kg}, {kf})}).empty();
}

StateVector eliminate_supplementaries(const StateVector& v, const KnowledgeBase& kb) {
  const IndexSet hidden = kb.hidden_events();
  if (hidden.empty()) return v;
  StateVector out = v;
  for (VarId i : hidden) out = remove_event(out, i);
  return simplify(out, false, nullptr);
}

Count count_models(const KnowledgeBase& kb) {
  const std::size_t n = kb.universe();
  const StateVector v = eliminate_supplementaries(valid_set(kb).result, kb);
  return cardinality(v, n) >> kb.hidden_events().size();
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Entailed: return "entailed";
    case Verdict::Refuted: return "refuted";
    case Verdict::Contingent: return "contingent";
    case Verdict::PremiseUnsatisfiable: return "premise-unsatisfiable";
  }
  return "?";
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Indicator: return "indicator";
    case Strategy::ValidIntersect: return "valid-intersect";
    case Strategy::InfoCount: return "info-count";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  for (Strategy s : {Strategy::Indicator, Strategy::ValidIntersect, Strategy::InfoCount}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

namespace {

nlohmann::ordered_json trace_object(const ValidSetTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : trace.intermediates) {
    steps.push_back({{"step", s.step},
                     {"formula", s.formula_index},
                     {"rows", s.rows},
                     {"pairwise_products", s.counters.pairwise_products},
                     {"pairwise_checks", s.reduction.pairwise_checks},
                     {"reductions_applied", s.reduction.reductions_applied}});
  }
  return {{"steps", steps},
          {"result_rows", trace.result.size()},
          {"early_exit", trace.early_exit},
          {"counters",
           {{"pairwise_products", trace.counters.pairwise_products},
            {"pairwise_subtractions", trace.counters.pairwise_subtractions}}}};
}

}  // namespace

std::string report_json(const QueryVerdict& verdict, const VariableRegistry& registry) {
  nlohmann::ordered_json out;
  out["verdict"] = to_string(verdict.verdict);
  out["strategy"] = to_string(verdict.strategy);
  if (verdict.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (VarId i : verdict.witness->upper()) {
      w[i <= registry.size() ? registry.name(i) : "E" + std::to_string(i)] = true;
    }
    for (VarId i : verdict.witness->lower()) {
      w[i <= registry.size() ? registry.name(i) : "E" + std::to_string(i)] = false;
    }
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["trace"] = trace_object(verdict.trace);
  return out.dump();
}

std::string trace_json(const ValidSetTrace& trace) { return trace_object(trace).dump(); }

}  // namespace stalg
