#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "satrl/term.hpp"

namespace satrl {

using ClauseId = std::uint32_t;

/// TPTP formula roles. Input roles are preserved verbatim; clauses created
/// by inference carry Role::Derived.
enum class Role {
  Axiom,
  Hypothesis,
  NegatedConjecture,
  Conjecture,
  Lemma,
  Plain,
  Derived,
};

std::string_view role_name(Role role);

enum class InferenceRule { Resolution, Factoring };

std::string_view rule_name(InferenceRule rule);

/// Provenance of a clause: read from the input, or produced by a rule
/// from earlier clauses.
struct Inference {
  enum class Kind { Input, Derived };

  Kind kind = Kind::Input;
  InferenceRule rule = InferenceRule::Resolution;  // meaningful iff Derived
  std::vector<ClauseId> parent_ids;

  static Inference input() { return Inference{}; }
  static Inference derived(InferenceRule r, std::vector<ClauseId> parents) {
    return Inference{Kind::Derived, r, std::move(parents)};
  }

  bool is_input() const { return kind == Kind::Input; }
  bool operator==(const Inference& other) const = default;
};

/// A disjunction of literals. The empty literal list is the empty clause
/// (falsum). order_number is the clause's birth index within an episode.
struct Clause {
  ClauseId id = 0;
  std::vector<Literal> literals;
  std::string label;
  Role role = Role::Axiom;
  ClauseId order_number = 0;
  Inference inference;
  bool processed = false;

  bool empty() const { return literals.empty(); }

  /// Total symbol occurrences (predicates, functions, constants, variables)
  /// summed over all literals; 0 for the empty clause.
  std::size_t symbol_count() const;

  void collect_vars(std::vector<std::string>& out) const;

  /// Literal-level structural equality; metadata (id, label, provenance)
  /// is not compared.
  bool same_literals(const Clause& other) const {
    return literals == other.literals;
  }
};

enum class SymbolKind { Function, Predicate };

/// Symbols are keyed by (name, arity): the same name at different arities
/// names distinct symbols.
struct SymbolKey {
  std::string name;
  std::size_t arity;

  auto operator<=>(const SymbolKey&) const = default;
};

using Signature = std::map<SymbolKey, SymbolKind>;

/// The clauses of one problem plus the symbol table they induce.
struct ClauseSet {
  std::vector<Clause> clauses;
  Signature signature;
  /// Set when the source used = or != ; the engine treats equality as an
  /// uninterpreted predicate.
  bool uses_equality = false;
};

}  // namespace satrl
