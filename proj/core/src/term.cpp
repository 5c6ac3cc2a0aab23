#include "satrl/term.hpp"

namespace satrl {

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_ || name_ != other.name_) return false;
  return args_ == other.args_;
}

std::size_t Term::symbol_count() const {
  std::size_t n = 1;
  for (const Term& a : args_) n += a.symbol_count();
  return n;
}

bool Term::contains_var(const std::string& var_name) const {
  if (is_var()) return name_ == var_name;
  for (const Term& a : args_) {
    if (a.contains_var(var_name)) return true;
  }
  return false;
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (is_var()) {
    out.push_back(name_);
    return;
  }
  for (const Term& a : args_) a.collect_vars(out);
}

bool Literal::operator==(const Literal& other) const {
  return positive == other.positive && same_atom(other);
}

bool Literal::same_atom(const Literal& other) const {
  return predicate == other.predicate && args == other.args;
}

std::size_t Literal::symbol_count() const {
  std::size_t n = 1;  // the predicate symbol itself
  for (const Term& a : args) n += a.symbol_count();
  return n;
}

void Literal::collect_vars(std::vector<std::string>& out) const {
  for (const Term& a : args) a.collect_vars(out);
}

Literal make_literal(bool positive, std::string predicate,
                     std::vector<Term> args) {
  return Literal{positive, std::move(predicate), std::move(args)};
}

}  // namespace satrl
