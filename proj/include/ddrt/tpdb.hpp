#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "ddrt/errors.hpp"
#include "ddrt/rewriting.hpp"

namespace ddrt {

/// Malformed input text.  `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct ParsedProblem {
  Trs trs;
  std::string source_name;
  std::set<std::string> declared_variables;
};

/// Parses the plain TPDB format: `(VAR …)`, `(RULES l -> r …)`,
/// `(COMMENT …)` and `(STRATEGY FULL)`.  Rules are indexed from 0 in file
/// order.  Throws ParseError for malformed text and InvalidRule for
/// ill-formed rules.
ParsedProblem parse_trs(std::string_view text, std::string source_name = {});

/// A single term; identifiers in `variables` are variables.
Term parse_term(std::string_view text, const std::set<std::string>& variables = {});

/// The system in plain TPDB format; parse_trs(format_trs(R)) gives R back.
std::string format_trs(const Trs& trs);

}  // namespace ddrt
