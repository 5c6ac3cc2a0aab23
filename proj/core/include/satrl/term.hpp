#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace satrl {

/// A first-order term: either a variable or a function application.
/// Constants are function applications with zero arguments.
class Term {
 public:
  enum class Kind { Variable, Function };

  static Term var(std::string name) {
    return Term(Kind::Variable, std::move(name), {});
  }
  static Term fun(std::string symbol, std::vector<Term> args = {}) {
    return Term(Kind::Function, std::move(symbol), std::move(args));
  }

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Variable; }
  bool is_fun() const { return kind_ == Kind::Function; }

  /// Variable name or function symbol, depending on kind.
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  /// Number of symbol occurrences in the term (variables included).
  std::size_t symbol_count() const;

  /// True iff the named variable occurs anywhere in the term.
  bool contains_var(const std::string& var_name) const;

  /// Appends every variable occurrence's name, in left-to-right order.
  void collect_vars(std::vector<std::string>& out) const;

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

/// An atomic predicate application or its negation.
struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<Term> args;

  bool operator==(const Literal& other) const;
  bool operator!=(const Literal& other) const { return !(*this == other); }

  /// True iff both literals apply the same predicate to equal arguments,
  /// polarity ignored.
  bool same_atom(const Literal& other) const;

  std::size_t symbol_count() const;
  void collect_vars(std::vector<std::string>& out) const;
};

Literal make_literal(bool positive, std::string predicate,
                     std::vector<Term> args = {});

}  // namespace satrl
