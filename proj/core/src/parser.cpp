#include "stalg/parser.hpp"

#include <cctype>

#include "stalg/error.hpp"

namespace stalg {
namespace {

enum class Tok { Ident, True, False, LParen, RParen, Not, And, Or, Xor, Implies, Iff, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool continues(Tok previous) {
  switch (previous) {
    case Tok::Not:
    case Tok::And:
    case Tok::Or:
    case Tok::Xor:
    case Tok::Implies:
    case Tok::Iff:
    case Tok::LParen:
    case Tok::Sep:
      return true;
    default:
      return false;
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t depth = 0;
  std::size_t k = 0;
  auto emit = [&](Tok kind, std::size_t len, std::string s = {}) {
    out.push_back({kind, std::move(s), line, col});
    k += len;
    col += len;
  };
  while (k < text.size()) {
    const char c = text[k];
    if (c == '\n') {
      if (depth == 0 && !out.empty() && !continues(out.back().kind)) {
        out.push_back({Tok::Sep, "\n", line, col});
      }
      ++k;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++k;
      ++col;
      continue;
    }
    if (c == '#') {
      while (k < text.size() && text[k] != '\n') ++k;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = k;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_' ||
              text[end] == '.')) {
        ++end;
      }
      std::string word(text.substr(k, end - k));
      Tok kind = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      emit(kind, end - k, std::move(word));
      continue;
    }
    const std::string_view rest = text.substr(k);
    if (rest.starts_with("<->")) {
      emit(Tok::Iff, 3);
    } else if (rest.starts_with("->")) {
      emit(Tok::Implies, 2);
    } else {
      switch (c) {
        case '(': ++depth; emit(Tok::LParen, 1); break;
        case ')':
          if (depth > 0) --depth;
          emit(Tok::RParen, 1);
          break;
        case '!':
        case '~': emit(Tok::Not, 1); break;
        case '&': emit(Tok::And, 1); break;
        case '|': emit(Tok::Or, 1); break;
        case '^': emit(Tok::Xor, 1); break;
        case '=': emit(Tok::Iff, 1); break;
        case ';': emit(Tok::Sep, 1); break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::End, {}, line, col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Xor: return "'^'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Sep: return "end of formula";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, VariableRegistry& registry, UnknownVariables policy)
      : tokens_(std::move(tokens)), registry_(registry), policy_(policy) {}

  std::vector<Formula> program() {
    std::vector<Formula> out;
    skip_separators();
    while (peek().kind != Tok::End) {
      out.push_back(formula());
      if (peek().kind != Tok::Sep && peek().kind != Tok::End) fail("expected end of formula");
      skip_separators();
    }
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(peek().line, peek().column,
                     what + ", found " + describe(peek().kind));
  }

  void skip_separators() {
    while (peek().kind == Tok::Sep) ++pos_;
  }

  Formula formula() {
    Formula lhs = implication();
    while (accept(Tok::Iff)) lhs = Formula::iff(std::move(lhs), implication());
    return lhs;
  }

  Formula implication() {
    Formula lhs = n_ary(Tok::Or, Op::Or);
    if (accept(Tok::Implies)) return Formula::implies(std::move(lhs), implication());
    return lhs;
  }

  Formula n_ary(Tok tok, Op op) {
    auto next = [&]() -> Formula {
      switch (op) {
        case Op::Or: return n_ary(Tok::Xor, Op::Xor);
        case Op::Xor: return n_ary(Tok::And, Op::And);
        default: return unary();
      }
    };
    Formula first = next();
    if (peek().kind != tok) return first;
    std::vector<Formula> args;
    args.push_back(std::move(first));
    while (accept(tok)) args.push_back(next());
    return Formula{op, 0, std::move(args)};
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: advance(); return Formula::constant(true);
      case Tok::False: advance(); return Formula::constant(false);
      case Tok::LParen: {
        advance();
        Formula inner = formula();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return inner;
      }
      case Tok::Ident: {
        std::optional<VarId> id = registry_.find(t.text);
        if (!id) {
          if (policy_ == UnknownVariables::Reject) fail("unknown variable '" + t.text + "'");
          try {
            id = registry_.intern(t.text);
          } catch (const Error& e) {
            throw ParseError(t.line, t.column, e.what());
          }
        }
        advance();
        return Formula::variable(*id);
      }
      default: fail("expected a variable, constant or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  VariableRegistry& registry_;
  UnknownVariables policy_;
};

}  // namespace

std::vector<Formula> parse_program(std::string_view text, VariableRegistry& registry,
                                   UnknownVariables policy) {
  return Parser(tokenize(text), registry, policy).program();
}

Formula parse_formula(std::string_view text, VariableRegistry& registry, UnknownVariables policy) {
  auto formulas = parse_program(text, registry, policy);
  if (formulas.size() != 1) {
    throw ParseError(1, 1, "expected exactly one formula, found " + std::to_string(formulas.size()));
  }
  return std::move(formulas.front());
}

}  // namespace stalg
