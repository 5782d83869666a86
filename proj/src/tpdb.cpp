#include "ddrt/tpdb.hpp"

#include <cctype>
#include <vector>

namespace ddrt {
namespace {

struct Token {
  enum Kind { Open, Close, Comma, Arrow, Ident, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, column = column_;
    if (at_end()) return {Token::End, "", line, column};
    char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',') {
      advance();
      return {c == '(' ? Token::Open : c == ')' ? Token::Close : Token::Comma, std::string(1, c), line, column};
    }
    if (starts_arrow()) {
      advance();
      advance();
      return {Token::Arrow, "->", line, column};
    }
    std::string ident;
    while (!at_end() && !is_delimiter(text_[pos_]) && !starts_arrow()) {
      ident += text_[pos_];
      advance();
    }
    return {Token::Ident, ident, line, column};
  }

  /// Consumes raw text up to the parenthesis closing an already opened one.
  void skip_balanced() {
    int depth = 1;
    while (!at_end()) {
      char c = text_[pos_];
      advance();
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) return;
    }
    throw ParseError(line_, column_, "unterminated section");
  }

 private:
  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',';
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool starts_arrow() const { return pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>'; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { shift(); }

  ParsedProblem problem(std::string source_name) {
    ParsedProblem out;
    out.source_name = std::move(source_name);
    std::vector<std::pair<Term, Term>> rules;
    bool seen_rules = false;
    while (tok_.kind != Token::End) {
      expect(Token::Open, "'('");
      if (tok_.kind != Token::Ident) fail("expected a section name");
      const std::string section = tok_.text;
      if (section == "COMMENT") {
        lex_.skip_balanced();
        shift();
        continue;
      }
      shift();
      if (section == "VAR") {
        if (seen_rules) fail("VAR section after RULES");
        while (tok_.kind == Token::Ident) {
          vars_.insert(tok_.text);
          shift();
        }
      } else if (section == "RULES") {
        seen_rules = true;
        while (tok_.kind != Token::Close) {
          Term l = term();
          expect(Token::Arrow, "'->'");
          Term r = term();
          if (tok_.kind == Token::Ident && tok_.text == "|") fail("conditional rules are not supported");
          rules.emplace_back(std::move(l), std::move(r));
        }
      } else if (section == "STRATEGY") {
        if (tok_.kind != Token::Ident || tok_.text != "FULL") fail("only STRATEGY FULL is supported");
        shift();
      } else {
        fail("unsupported section " + section);
      }
      expect(Token::Close, "')'");
    }
    out.trs = Trs::from_pairs(rules);
    out.declared_variables = vars_;
    return out;
  }

  Term single_term(const std::set<std::string>& vars) {
    vars_ = vars;
    Term t = term();
    if (tok_.kind != Token::End) fail("trailing input after term");
    return t;
  }

 private:
  Term term() {
    if (tok_.kind != Token::Ident) fail("expected a term");
    std::string name = tok_.text;
    shift();
    if (vars_.count(name)) {
      if (tok_.kind == Token::Open) fail("variable " + name + " applied to arguments");
      return Term::var(name);
    }
    std::vector<Term> args;
    if (tok_.kind == Token::Open) {
      shift();
      if (tok_.kind != Token::Close) {
        args.push_back(term());
        while (tok_.kind == Token::Comma) {
          shift();
          args.push_back(term());
        }
      }
      expect(Token::Close, "')' or ','");
    }
    return Term::app(name, std::move(args));
  }

  void shift() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k) fail("expected " + what);
    shift();
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = tok_.kind == Token::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError(tok_.line, tok_.column, message + ", found " + found);
  }

  Lexer lex_;
  Token tok_{Token::End, "", 1, 1};
  std::set<std::string> vars_;
};

}  // namespace

ParsedProblem parse_trs(std::string_view text, std::string source_name) {
  return Parser(text).problem(std::move(source_name));
}

Term parse_term(std::string_view text, const std::set<std::string>& variables) {
  return Parser(text).single_term(variables);
}

std::string format_trs(const Trs& trs) {
  std::set<std::string> vars;
  for (const Rule& r : trs)
    for (const Term* side : {&r.lhs, &r.rhs})
      for (const std::string& v : variables(*side)) vars.insert(v);
  std::string out = "(VAR";
  for (const std::string& v : vars) out += " " + v;
  out += ")\n(RULES\n";
  for (const Rule& r : trs) out += "  " + r.to_string() + "\n";
  out += ")\n";
  return out;
}

}  // namespace ddrt
