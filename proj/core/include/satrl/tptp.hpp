#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "satrl/clause.hpp"

namespace satrl {

/// Error raised for any malformed input. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Maps an include path (the single-quoted string in `include('...').`)
/// to the text of that file. Throwing signals an unresolvable include.
using IncludeResolver = std::function<std::string(const std::string&)>;

/// Parses the supported CNF subset of TPTP. One Clause per cnf statement,
/// in file order, with ids and order numbers assigned 0,1,2,...  Include
/// directives are resolved recursively at the point of the directive.
ClauseSet parse_problem(const std::string& text,
                        const IncludeResolver& resolver = nullptr);

std::string serialize_term(const Term& term);
std::string serialize_literal(const Literal& literal);

/// Renders `cnf(label, role, disjunction).`; the empty clause is rendered
/// with the output-only token $false.
std::string serialize_clause(const Clause& clause);

}  // namespace satrl
