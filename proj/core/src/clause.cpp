#include "satrl/clause.hpp"

namespace satrl {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Axiom: return "axiom";
    case Role::Hypothesis: return "hypothesis";
    case Role::NegatedConjecture: return "negated_conjecture";
    case Role::Conjecture: return "conjecture";
    case Role::Lemma: return "lemma";
    case Role::Plain: return "plain";
    case Role::Derived: return "derived";
  }
  return "axiom";
}

std::string_view rule_name(InferenceRule rule) {
  switch (rule) {
    case InferenceRule::Resolution: return "resolution";
    case InferenceRule::Factoring: return "factoring";
  }
  return "resolution";
}

std::size_t Clause::symbol_count() const {
  std::size_t n = 0;
  for (const Literal& lit : literals) n += lit.symbol_count();
  return n;
}

void Clause::collect_vars(std::vector<std::string>& out) const {
  for (const Literal& lit : literals) lit.collect_vars(out);
}

}  // namespace satrl
