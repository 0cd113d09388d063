#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stalg/dense.hpp"
#include "stalg/error.hpp"
#include "stalg/inference.hpp"
#include "stalg/serialize.hpp"

namespace stalg::cli {
namespace {

struct Config {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string output = "rows";
  std::string order;
  std::string target;
  std::string strategy = "indicator";
  std::string op = "product";
  bool canonical = false;
  bool trace = false;
  bool parallel = false;
  bool keep_supplementaries = false;
  bool strict = false;
  std::size_t oracle_cap = dense::kDefaultCap;
  std::size_t compile_cap = 16;
  std::ostream* diagnostics = &std::cerr;

  Execution exec() const { return parallel ? Execution::Parallel : Execution::Sequential; }
};

enum class Format { Dsl, Dimacs, Rows, Json };

struct Source {
  std::string name;
  std::string text;
};

// Everything read from the inputs. `blocks` holds one vector per source
// formula or row block, in input order.
struct Loaded {
  KnowledgeBase kb;
  std::vector<StateVector> blocks;
  std::vector<Formula> formulas;
  std::size_t universe = 0;
  bool has_rows = false;
};

// Error tagged with the input it came from.
struct InputError {
  std::string where;
  std::string what;
};

std::vector<Source> read_inputs(const Config& cfg, std::istream& in) {
  std::vector<Source> out;
  auto slurp = [](std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
  };
  if (cfg.inputs.empty()) {
    out.push_back({"<stdin>", slurp(in)});
    return out;
  }
  for (const auto& path : cfg.inputs) {
    if (path == "-") {
      out.push_back({"<stdin>", slurp(in)});
      continue;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError{path, "cannot open file"};
    out.push_back({path, slurp(file)});
  }
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Format sniff(const Source& src) {
  std::istringstream lines(src.text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const char c = line[first];
    if (c == 'p' && line.compare(first, 2, "p ") == 0) return Format::Dimacs;
    if (c == 'c' && (line.size() == first + 1 || line[first + 1] == ' ')) return Format::Dimacs;
    if (c == '{') return Format::Json;
    if (c == '0' || c == '1' || c == '-') {
      const auto stop = line.find_first_not_of("01-", first);
      if (stop == std::string::npos || line[stop] == ' ' || line[stop] == '\r') return Format::Rows;
    }
    return Format::Dsl;
  }
  return Format::Dsl;
}

Format resolve_format(const std::string& flag, const Source& src) {
  if (flag == "dsl") return Format::Dsl;
  if (flag == "dimacs") return Format::Dimacs;
  if (flag == "rows") return Format::Rows;
  if (flag == "json") return Format::Json;
  if (ends_with(src.name, ".cnf") || ends_with(src.name, ".dimacs")) return Format::Dimacs;
  if (ends_with(src.name, ".rows")) return Format::Rows;
  if (ends_with(src.name, ".json")) return Format::Json;
  return sniff(src);
}

KnowledgeBaseOptions kb_options(const Config& cfg, DecompositionMode mode) {
  KnowledgeBaseOptions o;
  o.compile.cap = cfg.compile_cap;
  o.compile.canonical = cfg.canonical;
  o.decomposition = mode;
  return o;
}

StateVector product_of(const std::vector<CompiledFormula>& parts, std::size_t from,
                       Execution exec) {
  StateVector acc = StateVector::trivial();
  for (std::size_t k = from; k < parts.size(); ++k) {
    acc = absorb_subsumed(reduce_heuristic(multiply(acc, parts[k].valid, nullptr, exec)).first);
  }
  return acc;
}

void add_formula(Loaded& l, const Formula& f, const Config& cfg) {
  const std::size_t before = l.kb.formulas().size();
  const std::size_t n = l.kb.add(f);
  l.formulas.push_back(f);
  const auto& all = l.kb.formulas();
  if (n == 1 || cfg.keep_supplementaries) {
    for (std::size_t k = before; k < all.size(); ++k) l.blocks.push_back(all[k].valid);
    return;
  }
  StateVector v = product_of(all, before, cfg.exec());
  for (VarId s : all.back().supplementary) v = remove_event(v, s);
  l.blocks.push_back(absorb_subsumed(reduce_heuristic(v).first));
}

void add_vector(Loaded& l, StateVector v, std::size_t width) {
  l.kb.registry().ensure(std::max<std::size_t>(width, v.max_var()));
  CompiledFormula c;
  c.formula = Formula::constant(true);
  c.info = complement(v, l.kb.registry().size());
  c.valid = v;
  l.kb.add_compiled(std::move(c));
  l.blocks.push_back(std::move(v));
  l.has_rows = true;
}

Loaded load(const Config& cfg, std::istream& in, DecompositionMode mode) {
  Loaded l{KnowledgeBase(kb_options(cfg, mode)), {}, {}, 0, false};
  std::size_t width = 0;
  for (const Source& src : read_inputs(cfg, in)) {
    try {
      switch (resolve_format(cfg.format, src)) {
        case Format::Dsl:
          for (const auto& f : parse_program(src.text, l.kb.registry())) add_formula(l, f, cfg);
          break;
        case Format::Dimacs: {
          DimacsOptions opts;
          opts.strict = cfg.strict;
          DimacsResult r = parse_dimacs(src.text, l.kb.registry(), opts);
          for (const auto& w : r.warnings) *cfg.diagnostics << src.name << ": warning: " << w << '\n';
          for (const auto& f : r.clauses) add_formula(l, f, cfg);
          width = std::max(width, r.num_vars);
          break;
        }
        case Format::Rows: {
          ParsedRowBlocks r = parse_row_blocks(src.text);
          width = std::max(width, r.width);
          for (auto& v : r.vectors) add_vector(l, std::move(v), r.width);
          break;
        }
        case Format::Json: {
          ParsedRows r = parse_json(src.text);
          width = std::max(width, r.width);
          add_vector(l, std::move(r.vector), r.width);
          break;
        }
      }
    } catch (const ParseError& e) {
      throw InputError{src.name + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()),
                       e.message()};
    }
  }
  l.universe = std::max(width, l.kb.universe());
  return l;
}

VariableOrder resolve_order(const Config& cfg, const VariableRegistry& registry,
                            std::size_t universe) {
  if (cfg.order.empty()) return VariableOrder::ascending(universe);
  std::vector<VarId> ids;
  std::string token;
  std::istringstream words(cfg.order);
  while (std::getline(words, token, ',')) {
    std::istringstream parts(token);
    std::string name;
    while (parts >> name) {
      const std::string_view view(name);
      if (std::all_of(view.begin(), view.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        ids.push_back(static_cast<VarId>(std::stoul(name)));
      } else if (auto id = registry.find(name)) {
        ids.push_back(*id);
      } else {
        throw Error(Errc::UnknownVariable, "order mentions unknown event '" + name + "'");
      }
    }
  }
  return VariableOrder(std::move(ids));
}

void write_vectors(const std::vector<StateVector>& vs, const Config& cfg, std::size_t universe,
                   std::ostream& out) {
  const std::size_t width = std::max<std::size_t>(universe, 1);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (cfg.output == "json") {
      out << to_json(vs[k], universe) << '\n';
      continue;
    }
    if (k) out << '\n';
    out << to_rows_text(vs[k], width);
  }
}

int cmd_compile(const Config& cfg, std::istream& in, std::ostream& out) {
  Loaded l = load(cfg, in, DecompositionMode::Auto);
  std::vector<StateVector> blocks = l.blocks;
  if (cfg.canonical) {
    const VariableOrder order = resolve_order(cfg, l.kb.registry(), l.universe);
    for (auto& b : blocks) b = canonicalize(b, order, cfg.exec());
  }
  write_vectors(blocks, cfg, l.universe, out);
  return kOk;
}

std::string describe_witness(const TObject& w, const VariableRegistry& registry) {
  std::vector<std::pair<VarId, bool>> fixed;
  for (VarId i : w.upper()) fixed.emplace_back(i, true);
  for (VarId i : w.lower()) fixed.emplace_back(i, false);
  std::sort(fixed.begin(), fixed.end());
  std::string s;
  for (const auto& [i, value] : fixed) {
    if (!s.empty()) s += ' ';
    s += i <= registry.size() ? registry.name(i) : "E" + std::to_string(i);
    s += value ? "=1" : "=0";
  }
  return s.empty() ? "(any state)" : s;
}

int cmd_prove(const Config& cfg, std::istream& in, std::ostream& out) {
  const auto strategy = parse_strategy(cfg.strategy);
  if (!strategy) throw Error(Errc::InvalidArgument, "unknown strategy '" + cfg.strategy + "'");
  Loaded l = load(cfg, in, DecompositionMode::Auto);
  Formula target;
  try {
    target = parse_formula(cfg.target, l.kb.registry());
  } catch (const ParseError& e) {
    throw InputError{"<target>:" + std::to_string(e.line()) + ":" + std::to_string(e.column()),
                     e.message()};
  }
  ValidSetOptions opts;
  opts.trace = cfg.trace;
  opts.exec = cfg.exec();
  const QueryVerdict v = query(l.kb, target, *strategy, opts);

  if (cfg.output == "json") {
    out << report_json(v, l.kb.registry()) << '\n';
  } else {
    out << to_string(v.verdict) << '\n';
    if (v.witness) out << "witness: " << describe_witness(*v.witness, l.kb.registry()) << '\n';
    if (cfg.trace) {
      for (const auto& s : v.trace.intermediates) {
        out << "step " << s.step << " formula " << s.formula_index << " rows " << s.rows
            << " products " << s.counters.pairwise_products << " checks "
            << s.reduction.pairwise_checks << " reductions " << s.reduction.reductions_applied
            << '\n';
      }
    }
  }
  switch (v.verdict) {
    case Verdict::Entailed: return kOk;
    case Verdict::Refuted: return kNo;
    case Verdict::Contingent: return kContingent;
    case Verdict::PremiseUnsatisfiable: return kUnsatisfiable;
  }
  return kUsage;
}

int cmd_count(const Config& cfg, std::istream& in, std::ostream& out) {
  Loaded l = load(cfg, in, DecompositionMode::Auto);
  l.kb.registry().ensure(l.universe);
  const Count n = count_models(l.kb);
  if (cfg.output == "json") {
    out << "{\"count\":\"" << n << "\",\"universe\":" << l.kb.registry().user_count() << "}\n";
  } else {
    out << n << '\n';
  }
  return kOk;
}

int cmd_canon(const Config& cfg, std::istream& in, std::ostream& out) {
  Loaded l = load(cfg, in, DecompositionMode::Auto);
  const VariableOrder order = resolve_order(cfg, l.kb.registry(), l.universe);
  std::vector<StateVector> blocks;
  for (const auto& b : l.blocks) blocks.push_back(canonicalize(b, order, cfg.exec()));
  write_vectors(blocks, cfg, l.universe, out);
  return kOk;
}

int cmd_reduce(const Config& cfg, std::istream& in, std::ostream& out) {
  Loaded l = load(cfg, in, DecompositionMode::Auto);
  std::vector<StateVector> blocks;
  std::vector<ReductionStats> stats;
  for (const auto& b : l.blocks) {
    auto [r, st] = reduce_heuristic(b);
    blocks.push_back(std::move(r));
    stats.push_back(st);
  }
  if (cfg.output == "json" || !cfg.trace) {
    write_vectors(blocks, cfg, l.universe, out);
    return kOk;
  }
  const std::size_t width = std::max<std::size_t>(l.universe, 1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out << '\n';
    out << "# " << stats[k].to_key_values() << '\n';
    out << to_rows_text(blocks[k], width);
  }
  return kOk;
}

int cmd_equiv(const Config& cfg, std::istream& in, std::ostream& out) {
  Loaded l = load(cfg, in, DecompositionMode::Auto);
  if (l.blocks.size() != 2) {
    throw Error(Errc::InvalidArgument,
                "equiv needs exactly two vectors, got " + std::to_string(l.blocks.size()));
  }
  const bool same = equivalent(l.blocks[0], l.blocks[1]);
  out << (same ? "equivalent" : "not equivalent") << '\n';
  return same ? kOk : kNo;
}

dense::DenseVector truth_table(const std::vector<Formula>& fs, std::size_t n, std::size_t cap) {
  dense::DenseVector d(n, cap);
  std::vector<bool> values(n + 1, false);
  for (std::size_t k = 0; k < d.dimension(); ++k) {
    for (std::size_t i = 1; i <= n; ++i) values[i] = (k & dense::state_bit(static_cast<VarId>(i), n)) != 0;
    bool all = true;
    for (const auto& f : fs) all = all && evaluate(f, values);
    d[k] = all ? 1 : 0;
  }
  return d;
}

int cmd_oracle_check(const Config& cfg, std::istream& in, std::ostream& out) {
  Loaded l = load(cfg, in, DecompositionMode::Off);
  const std::size_t n = l.universe;
  const std::size_t cap = cfg.oracle_cap;
  if (n > cap) {
    throw Error(Errc::UniverseTooLarge, "universe of " + std::to_string(n) +
                                            " events exceeds the oracle cap of " +
                                            std::to_string(cap));
  }
  auto ex = [&](const StateVector& s) { return dense::expand(s, n, cap); };
  auto need = [&](std::size_t k) {
    if (l.blocks.size() < k) {
      throw Error(Errc::InvalidArgument, "operation '" + cfg.op + "' needs " +
                                             std::to_string(k) + " input vectors");
    }
  };
  const auto& bs = l.blocks;
  bool agree = true;

  if (cfg.op == "product" || cfg.op == "sum") {
    need(1);
    const bool product = cfg.op == "product";
    StateVector sparse = bs[0];
    dense::DenseVector d = ex(bs[0]);
    for (std::size_t k = 1; k < bs.size(); ++k) {
      sparse = product ? multiply(sparse, bs[k], nullptr, cfg.exec()) : add(sparse, bs[k]);
      d = product ? dense::mul(d, ex(bs[k])) : dense::add(d, ex(bs[k]));
    }
    agree = ex(sparse) == d;
  } else if (cfg.op == "difference") {
    need(2);
    agree = ex(subtract_set(bs[0], bs[1])) ==
            dense::set_difference(dense::binary_project(ex(bs[0])), dense::binary_project(ex(bs[1])));
  } else if (cfg.op == "complement") {
    need(1);
    for (const auto& b : bs) {
      agree = agree && ex(complement(b, n)) ==
                           dense::set_difference(dense::DenseVector::ones(n, cap),
                                                 dense::binary_project(ex(b)));
    }
  } else if (cfg.op == "canonical") {
    need(1);
    const VariableOrder order = resolve_order(cfg, l.kb.registry(), n);
    for (const auto& b : bs) {
      agree = agree && ex(canonicalize(b, order, cfg.exec())) == dense::binary_project(ex(b));
    }
  } else if (cfg.op == "reduce") {
    need(1);
    for (const auto& b : bs) agree = agree && ex(reduce_heuristic(b).first) == ex(b);
  } else if (cfg.op == "valid-set" || cfg.op == "count") {
    dense::DenseVector expected;
    if (l.has_rows) {
      expected = dense::DenseVector::ones(n, cap);
      for (const auto& b : bs) expected = dense::mul(expected, dense::binary_project(ex(b)));
    } else {
      expected = truth_table(l.formulas, n, cap);
    }
    if (cfg.op == "valid-set") {
      ValidSetOptions opts;
      opts.exec = cfg.exec();
      agree = dense::binary_project(ex(valid_set(l.kb, opts).result)) == expected;
    } else {
      l.kb.registry().ensure(n);
      agree = count_models(l.kb) == Count(expected.popcount());
    }
  } else {
    throw Error(Errc::InvalidArgument, "unknown operation '" + cfg.op + "'");
  }
  out << (agree ? "agree" : "disagree") << '\n';
  return agree ? kOk : kNo;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("inputs", cfg.inputs, "Input files; '-' or none reads standard input");
  sub->add_option("-f,--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"auto", "dsl", "dimacs", "rows", "json"}))
      ->envname("STALG_FORMAT");
  sub->add_option("-o,--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"rows", "json"}))
      ->envname("STALG_OUTPUT");
  sub->add_option("--order", cfg.order,
                  "Event order for canonical forms, smallest first (ids or names, comma separated)")
      ->envname("STALG_ORDER");
  sub->add_flag("--canonical", cfg.canonical, "Store and print canonical forms")
      ->envname("STALG_CANONICAL");
  sub->add_flag("--trace", cfg.trace, "Print per-step row counts and counters")
      ->envname("STALG_TRACE");
  sub->add_flag("--parallel", cfg.parallel, "Data-parallel products and canonicalization")
      ->envname("STALG_PARALLEL");
  sub->add_flag("--keep-supplementaries", cfg.keep_supplementaries,
                "Print decomposed formulas part by part, supplementary events included")
      ->envname("STALG_KEEP_SUPPLEMENTARIES");
  sub->add_flag("--strict", cfg.strict, "Treat DIMACS clause-count mismatches as errors")
      ->envname("STALG_STRICT");
  sub->add_option("--compile-cap", cfg.compile_cap,
                  "Largest variable count compiled without supplementary events")
      ->check(CLI::PositiveNumber)
      ->envname("STALG_COMPILE_CAP");
  sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest universe oracle-check will expand")
      ->check(CLI::Range(1, 62))
      ->envname("STALG_ORACLE_CAP");
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-vector algebra for propositional logic"};
  app.name("stalg");
  app.require_subcommand(1);
  Config cfg;
  cfg.diagnostics = &err;

  auto* compile_cmd = app.add_subcommand("compile", "Compile formulas to state vectors");
  auto* prove_cmd = app.add_subcommand("prove", "Decide whether the premises entail a target");
  auto* count_cmd = app.add_subcommand("count", "Count satisfying assignments");
  auto* canon_cmd = app.add_subcommand("canon", "Canonical reduced form under an event order");
  auto* reduce_cmd = app.add_subcommand("reduce", "Heuristic reduction");
  auto* equiv_cmd = app.add_subcommand("equiv", "Set equivalence of two vectors");
  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "Recompute an operation densely and compare");
  for (auto* sub : {compile_cmd, prove_cmd, count_cmd, canon_cmd, reduce_cmd, equiv_cmd, oracle_cmd}) {
    add_common(sub, cfg);
  }
  prove_cmd->add_option("-t,--target", cfg.target, "Formula to decide")->required();
  prove_cmd->add_option("-s,--strategy", cfg.strategy, "indicator, valid-intersect or info-count")
      ->check(CLI::IsMember({"indicator", "valid-intersect", "info-count"}))
      ->envname("STALG_STRATEGY");
  oracle_cmd
      ->add_option("--op", cfg.op,
                   "product, sum, difference, complement, canonical, reduce, valid-set or count")
      ->check(CLI::IsMember(
          {"product", "sum", "difference", "complement", "canonical", "reduce", "valid-set", "count"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compile_cmd) return cmd_compile(cfg, in, out);
    if (*prove_cmd) return cmd_prove(cfg, in, out);
    if (*count_cmd) return cmd_count(cfg, in, out);
    if (*canon_cmd) return cmd_canon(cfg, in, out);
    if (*reduce_cmd) return cmd_reduce(cfg, in, out);
    if (*equiv_cmd) return cmd_equiv(cfg, in, out);
    if (*oracle_cmd) return cmd_oracle_check(cfg, in, out);
  } catch (const InputError& e) {
    err << "stalg: " << e.where << ": " << e.what << '\n';
  } catch (const Error& e) {
    err << "stalg: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "stalg: " << e.what() << '\n';
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("stalg");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace stalg::cli
