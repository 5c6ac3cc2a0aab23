#include <cctype>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "satrl/tptp.hpp"

namespace satrl {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok {
  LowerWord,
  UpperWord,
  Quoted,
  Integer,
  DollarWord,
  LParen,
  RParen,
  Comma,
  Period,
  Pipe,
  Tilde,
  Equal,
  NotEqual,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }

 private:
  void advance() {
    skip_blank_and_comments();
    current_.line = line_;
    current_.column = column_;
    current_.text.clear();
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (c == '(') { bump(); current_.kind = Tok::LParen; return; }
    if (c == ')') { bump(); current_.kind = Tok::RParen; return; }
    if (c == ',') { bump(); current_.kind = Tok::Comma; return; }
    if (c == '.') { bump(); current_.kind = Tok::Period; return; }
    if (c == '|') { bump(); current_.kind = Tok::Pipe; return; }
    if (c == '~') { bump(); current_.kind = Tok::Tilde; return; }
    if (c == '=') { bump(); current_.kind = Tok::Equal; return; }
    if (c == '!') {
      bump();
      if (pos_ < text_.size() && text_[pos_] == '=') {
        bump();
        current_.kind = Tok::NotEqual;
        return;
      }
      throw ParseError(line_, column_, "expected '=' after '!'");
    }
    if (c == '\'') { lex_quoted(); return; }
    if (c == '$') {
      bump();
      current_.kind = Tok::DollarWord;
      current_.text = "$";
      while (pos_ < text_.size() && is_word_char(text_[pos_])) {
        current_.text += text_[pos_];
        bump();
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Tok::Integer;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text += text_[pos_];
        bump();
      }
      return;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      current_.kind = Tok::LowerWord;
      lex_word();
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Tok::UpperWord;
      lex_word();
      return;
    }
    throw ParseError(line_, column_,
                     std::string("unexpected character '") + c + "'");
  }

  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void lex_word() {
    while (pos_ < text_.size() && is_word_char(text_[pos_])) {
      current_.text += text_[pos_];
      bump();
    }
  }

  void lex_quoted() {
    bump();  // opening quote
    current_.kind = Tok::Quoted;
    while (true) {
      if (pos_ >= text_.size()) {
        throw ParseError(current_.line, current_.column,
                         "unterminated single-quoted atom");
      }
      char c = text_[pos_];
      if (c == '\'') { bump(); return; }
      if (c == '\\') {
        bump();
        if (pos_ >= text_.size()) {
          throw ParseError(current_.line, current_.column,
                           "unterminated escape in quoted atom");
        }
        c = text_[pos_];
      }
      current_.text += c;
      bump();
    }
  }

  void skip_blank_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

std::optional<Role> role_from_word(const std::string& word) {
  if (word == "axiom") return Role::Axiom;
  if (word == "hypothesis") return Role::Hypothesis;
  if (word == "negated_conjecture") return Role::NegatedConjecture;
  if (word == "conjecture") return Role::Conjecture;
  if (word == "lemma") return Role::Lemma;
  if (word == "plain") return Role::Plain;
  return std::nullopt;
}

class Parser {
 public:
  Parser(const IncludeResolver& resolver, ClauseSet& out,
         std::vector<std::string>& include_stack)
      : resolver_(resolver), out_(out), include_stack_(include_stack) {}

  void parse_statements(const std::string& text) {
    Lexer lex(text);
    while (lex.peek().kind != Tok::End) {
      Token head = lex.next();
      if (head.kind != Tok::LowerWord) {
        lex.fail(head, "expected 'cnf' or 'include' statement");
      }
      if (head.text == "cnf") {
        parse_cnf(lex);
      } else if (head.text == "include") {
        parse_include(lex);
      } else if (head.text == "fof" || head.text == "tff" ||
                 head.text == "thf" || head.text == "tpi") {
        lex.fail(head, "'" + head.text +
                           "' statements are not supported: clausification is "
                           "out of scope, provide the problem in CNF");
      } else {
        lex.fail(head, "unknown statement '" + head.text + "'");
      }
    }
  }

 private:
  void expect(Lexer& lex, Tok kind, const char* what) {
    Token t = lex.next();
    if (t.kind != kind) lex.fail(t, std::string("expected ") + what);
  }

  void parse_include(Lexer& lex) {
    expect(lex, Tok::LParen, "'(' after include");
    Token name = lex.next();
    if (name.kind != Tok::Quoted) {
      lex.fail(name, "expected single-quoted include path");
    }
    expect(lex, Tok::RParen, "')' closing include");
    expect(lex, Tok::Period, "'.' after include");

    for (const std::string& active : include_stack_) {
      if (active == name.text) {
        lex.fail(name, "include cycle through '" + name.text + "'");
      }
    }
    if (!resolver_) {
      lex.fail(name, "unresolvable include '" + name.text +
                         "': no include resolver configured");
    }
    std::string included;
    try {
      included = resolver_(name.text);
    } catch (const std::exception& e) {
      lex.fail(name, "unresolvable include '" + name.text + "': " + e.what());
    }
    include_stack_.push_back(name.text);
    Parser sub(resolver_, out_, include_stack_);
    sub.parse_statements(included);
    include_stack_.pop_back();
  }

  void parse_cnf(Lexer& lex) {
    expect(lex, Tok::LParen, "'(' after cnf");
    Token name = lex.next();
    if (name.kind != Tok::LowerWord && name.kind != Tok::Quoted &&
        name.kind != Tok::Integer) {
      lex.fail(name, "expected clause name");
    }
    expect(lex, Tok::Comma, "',' after clause name");
    Token role_tok = lex.next();
    if (role_tok.kind != Tok::LowerWord) {
      lex.fail(role_tok, "expected formula role");
    }
    std::optional<Role> role = role_from_word(role_tok.text);
    if (!role) lex.fail(role_tok, "unknown role '" + role_tok.text + "'");
    expect(lex, Tok::Comma, "',' after role");

    Clause clause;
    clause.label = name.text;
    clause.role = *role;
    clause.inference = Inference::input();
    clause.literals.push_back(parse_literal(lex));
    while (lex.peek().kind == Tok::Pipe) {
      lex.next();
      clause.literals.push_back(parse_literal(lex));
    }

    if (lex.peek().kind == Tok::Comma) skip_annotations(lex);
    expect(lex, Tok::RParen, "')' closing cnf statement");
    expect(lex, Tok::Period, "'.' after cnf statement");

    ClauseId idx = static_cast<ClauseId>(out_.clauses.size());
    clause.id = idx;
    clause.order_number = idx;
    out_.clauses.push_back(std::move(clause));
  }

  // Source/annotation fields are not preserved; everything up to the
  // closing paren of the cnf statement is discarded.
  void skip_annotations(Lexer& lex) {
    int depth = 0;
    while (true) {
      const Token& t = lex.peek();
      if (t.kind == Tok::End) lex.fail(t, "unterminated cnf annotations");
      if (t.kind == Tok::LParen) ++depth;
      if (t.kind == Tok::RParen) {
        if (depth == 0) return;  // the cnf statement's own closing paren
        --depth;
      }
      lex.next();
    }
  }

  Literal parse_literal(Lexer& lex) {
    const Token& t = lex.peek();
    if (t.kind == Tok::Tilde) {
      lex.next();
      Token head = lex.next();
      if (head.kind != Tok::LowerWord && head.kind != Tok::Quoted) {
        lex.fail(head, "expected atom after '~'");
      }
      auto [symbol, args] = parse_application(lex, head);
      register_symbol(head, symbol, args.size(), SymbolKind::Predicate);
      return Literal{false, std::move(symbol), std::move(args)};
    }
    if (t.kind == Tok::DollarWord) {
      lex.fail(t, "unsupported token '" + t.text + "'");
    }
    if (t.kind == Tok::UpperWord) {
      // A bare variable can only begin an equality literal.
      Term lhs = parse_term(lex);
      return parse_equality_rest(lex, std::move(lhs));
    }
    if (t.kind == Tok::LowerWord || t.kind == Tok::Quoted) {
      Token head = lex.next();
      auto [symbol, args] = parse_application(lex, head);
      if (lex.peek().kind == Tok::Equal || lex.peek().kind == Tok::NotEqual) {
        register_symbol(head, symbol, args.size(), SymbolKind::Function);
        return parse_equality_rest(
            lex, Term::fun(std::move(symbol), std::move(args)));
      }
      register_symbol(head, symbol, args.size(), SymbolKind::Predicate);
      return Literal{true, std::move(symbol), std::move(args)};
    }
    lex.fail(t, "expected literal");
  }

  Literal parse_equality_rest(Lexer& lex, Term lhs) {
    Token op = lex.next();
    if (op.kind != Tok::Equal && op.kind != Tok::NotEqual) {
      lex.fail(op, "expected '=' or '!=' after term");
    }
    Term rhs = parse_term(lex);
    out_.uses_equality = true;
    return Literal{op.kind == Tok::Equal, "=", {std::move(lhs), std::move(rhs)}};
  }

  Term parse_term(Lexer& lex) {
    Token head = lex.next();
    if (head.kind == Tok::UpperWord) return Term::var(head.text);
    if (head.kind == Tok::LowerWord || head.kind == Tok::Quoted) {
      auto [symbol, args] = parse_application(lex, head);
      register_symbol(head, symbol, args.size(), SymbolKind::Function);
      return Term::fun(std::move(symbol), std::move(args));
    }
    if (head.kind == Tok::DollarWord) {
      lex.fail(head, "unsupported token '" + head.text + "'");
    }
    lex.fail(head, "expected term");
  }

  /// Parses the optional parenthesized argument list after `head`.
  std::pair<std::string, std::vector<Term>> parse_application(Lexer& lex,
                                                              const Token& head) {
    std::vector<Term> args;
    if (lex.peek().kind == Tok::LParen) {
      lex.next();
      args.push_back(parse_term(lex));
      while (lex.peek().kind == Tok::Comma) {
        lex.next();
        args.push_back(parse_term(lex));
      }
      expect(lex, Tok::RParen, "')' closing argument list");
    }
    return {head.text, std::move(args)};
  }

  void register_symbol(const Token& at, const std::string& name,
                       std::size_t arity, SymbolKind kind) {
    SymbolKey key{name, arity};
    auto [it, inserted] = out_.signature.emplace(key, kind);
    if (!inserted && it->second != kind) {
      throw ParseError(
          at.line, at.column,
          "symbol '" + name + "/" + std::to_string(arity) + "' used both as " +
              (kind == SymbolKind::Predicate ? "predicate and function"
                                             : "function and predicate"));
    }
  }

  const IncludeResolver& resolver_;
  ClauseSet& out_;
  std::vector<std::string>& include_stack_;
};

}  // namespace

ClauseSet parse_problem(const std::string& text,
                        const IncludeResolver& resolver) {
  ClauseSet result;
  std::vector<std::string> include_stack;
  Parser parser(resolver, result, include_stack);
  parser.parse_statements(text);
  return result;
}

}  // namespace satrl
