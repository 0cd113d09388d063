#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stalg/compile.hpp"
#include "stalg/parser.hpp"
#include "stalg/reduction.hpp"

namespace stalg {

enum class DecompositionMode {
  Off,     // formulas over the compile cap are rejected
  Auto,    // split only formulas over the compile cap
  Always,  // split every formula deeper or wider than the thresholds
};

struct KnowledgeBaseOptions {
  CompileOptions compile{};
  DecomposeOptions decompose{};
  DecompositionMode decomposition = DecompositionMode::Auto;
};

/// Premises as compiled state vectors plus the event registry they share.
///
/// Copies are independent, which is how queries add indicator events without
/// touching the caller's base.
class KnowledgeBase {
 public:
  explicit KnowledgeBase(KnowledgeBaseOptions options = {});

  VariableRegistry& registry() noexcept { return registry_; }
  const VariableRegistry& registry() const noexcept { return registry_; }
  const KnowledgeBaseOptions& options() const noexcept { return options_; }

  const std::vector<CompiledFormula>& formulas() const noexcept { return formulas_; }
  bool empty() const noexcept { return formulas_.empty(); }
  // Number of registered events, hidden ones included.
  std::size_t universe() const noexcept { return registry_.size(); }
  IndexSet hidden_events() const { return registry_.hidden(); }

  // Compiles f, splitting it according to the decomposition mode. Returns the
  // number of vectors added.
  std::size_t add(const Formula& f);
  void add_compiled(CompiledFormula c);
  // Parses a DSL program and adds every formula. Returns the formula count.
  std::size_t add_text(std::string_view text,
                       UnknownVariables policy = UnknownVariables::AutoRegister);
  DimacsResult add_dimacs(std::string_view text, const DimacsOptions& options = {});

 private:
  KnowledgeBaseOptions options_;
  VariableRegistry registry_;
  std::vector<CompiledFormula> formulas_;
};

struct ValidSetOptions {
  bool trace = false;
  // Multiply next the vector whose fixed columns overlap most with those
  // already multiplied.
  bool pivot_clustering = false;
  // Skip subsumption so multiplicities stay coordinate-exact.
  bool preserve_multiplicity = false;
  // Keep every intermediate vector, not just its size.
  bool keep_partials = false;
  Execution exec = Execution::Sequential;
};

struct FoldStep {
  std::size_t step = 0;
  std::size_t formula_index = 0;
  std::size_t rows = 0;
  OpCounters counters;
  ReductionStats reduction;
};

struct ValidSetTrace {
  std::vector<FoldStep> intermediates;
  std::vector<StateVector> partials;
  StateVector result;
  OpCounters counters;
  // Set when the running product became empty before the last vector.
  bool early_exit = false;
};

// V = t s1 s2 ... sm, simplified after each product. The empty base gives t.
ValidSetTrace valid_set(const KnowledgeBase& kb, const ValidSetOptions& options = {});

struct StreamResult {
  StateVector result;
  std::size_t steps = 0;
  bool budget_exhausted = false;
  bool empty = false;
};

// Valid set of a possibly unbounded sequence of vectors. `next` returns
// nothing when the sequence ends; at most `budget` vectors are consumed.
StreamResult valid_set_stream(const std::function<std::optional<StateVector>()>& next,
                              std::size_t budget);

// Union of the information vectors, folded as I + (info \ I).
StateVector information_set(const KnowledgeBase& kb);

enum class Verdict { Entailed, Refuted, Contingent, PremiseUnsatisfiable };
enum class Strategy { Indicator, ValidIntersect, InfoCount };

struct QueryVerdict {
  Verdict verdict = Verdict::Contingent;
  // A premise state backing the verdict, hidden events removed. For
  // Contingent it falsifies the target.
  std::optional<TObject> witness;
  Strategy strategy = Strategy::Indicator;
  ValidSetTrace trace;
};

QueryVerdict query(const KnowledgeBase& kb, const Formula& target,
                   Strategy strategy = Strategy::Indicator, const ValidSetOptions& options = {});

// True iff f and g agree on every state of the premise.
bool equivalent_formulas(const KnowledgeBase& kb, const Formula& f, const Formula& g);

// Removes every supplementary and indicator event of kb from v.
StateVector eliminate_supplementaries(const StateVector& v, const KnowledgeBase& kb);

// Satisfying assignments over the user events of kb.
Count count_models(const KnowledgeBase& kb);

const char* to_string(Verdict v) noexcept;
const char* to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

// JSON report: verdict, strategy, witness, per-step row counts and counters.
std::string report_json(const QueryVerdict& verdict, const VariableRegistry& registry);
std::string trace_json(const ValidSetTrace& trace);

}  // namespace stalg
