#include <charconv>
#include <cstdlib>

#include "stalg/error.hpp"
#include "stalg/parser.hpp"

namespace stalg {
namespace {

struct Word {
  std::string_view text;
  std::size_t column;
};

std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

template <class Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

DimacsResult parse_dimacs(std::string_view text, VariableRegistry& registry,
                          const DimacsOptions& options) {
  DimacsResult result;
  bool have_header = false;
  std::vector<Formula> pending;
  bool open_clause = false;
  std::size_t line_no = 0;
  std::size_t last_line = 1;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0].text.front() == 'c') continue;
    if (words[0].text == "%") break;
    if (words[0].text == "p") {
      if (have_header) throw ParseError(line_no, words[0].column, "duplicate header");
      if (words.size() != 4 || words[1].text != "cnf") {
        throw ParseError(line_no, words[0].column, "expected header 'p cnf <vars> <clauses>'");
      }
      auto n = to_int<std::size_t>(words[2].text);
      auto m = to_int<std::size_t>(words[3].text);
      if (!n) throw ParseError(line_no, words[2].column, "bad variable count");
      if (!m) throw ParseError(line_no, words[3].column, "bad clause count");
      result.num_vars = *n;
      result.declared_clauses = *m;
      registry.ensure(*n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, words[0].column, "clause before 'p cnf' header");

    for (const Word& w : words) {
      auto lit = to_int<long long>(w.text);
      if (!lit) throw ParseError(line_no, w.column, "bad literal '" + std::string(w.text) + "'");
      if (*lit == 0) {
        if (pending.empty()) {
          result.clauses.push_back(Formula::constant(false));
        } else {
          result.clauses.push_back(Formula{Op::Or, 0, std::move(pending)});
        }
        pending.clear();
        open_clause = false;
        continue;
      }
      const auto v = static_cast<std::size_t>(std::llabs(*lit));
      if (v > result.num_vars) {
        throw ParseError(line_no, w.column,
                         "variable " + std::to_string(v) + " exceeds declared " +
                             std::to_string(result.num_vars));
      }
      Formula var = Formula::variable(static_cast<VarId>(v));
      pending.push_back(*lit < 0 ? Formula::negation(std::move(var)) : std::move(var));
      open_clause = true;
      last_line = line_no;
    }
  }

  if (!have_header) throw ParseError(line_no, 1, "missing 'p cnf' header");
  if (open_clause) {
    const std::string msg = "last clause is not terminated by 0";
    if (options.strict) throw ParseError(last_line, 1, msg);
    result.warnings.push_back(msg);
    result.clauses.push_back(Formula{Op::Or, 0, std::move(pending)});
  }
  if (result.clauses.size() != result.declared_clauses) {
    const std::string msg = "header declares " + std::to_string(result.declared_clauses) +
                            " clauses, found " + std::to_string(result.clauses.size());
    if (options.strict) throw ParseError(line_no, 1, msg);
    result.warnings.push_back(msg);
  }
  return result;
}

}  // namespace stalg
