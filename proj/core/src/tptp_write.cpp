#include <cctype>
#include <sstream>

#include "satrl/tptp.hpp"

namespace satrl {

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Emits atoms/names that are not plain lower words in quoted form.
std::string atom_text(const std::string& s) {
  if (is_lower_word(s)) return s;
  std::string quoted = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '\'';
  return quoted;
}

std::string name_text(const std::string& s) {
  if (is_integer(s)) return s;
  return atom_text(s);
}

void write_term(std::ostringstream& out, const Term& term) {
  if (term.is_var()) {
    out << term.name();
    return;
  }
  out << atom_text(term.name());
  if (!term.args().empty()) {
    out << '(';
    for (std::size_t i = 0; i < term.args().size(); ++i) {
      if (i > 0) out << ',';
      write_term(out, term.args()[i]);
    }
    out << ')';
  }
}

void write_literal(std::ostringstream& out, const Literal& lit) {
  if (lit.predicate == "=" && lit.args.size() == 2) {
    write_term(out, lit.args[0]);
    out << (lit.positive ? " = " : " != ");
    write_term(out, lit.args[1]);
    return;
  }
  if (!lit.positive) out << '~';
  out << atom_text(lit.predicate);
  if (!lit.args.empty()) {
    out << '(';
    for (std::size_t i = 0; i < lit.args.size(); ++i) {
      if (i > 0) out << ',';
      write_term(out, lit.args[i]);
    }
    out << ')';
  }
}

}  // namespace

std::string serialize_term(const Term& term) {
  std::ostringstream out;
  write_term(out, term);
  return out.str();
}

std::string serialize_literal(const Literal& literal) {
  std::ostringstream out;
  write_literal(out, literal);
  return out.str();
}

std::string serialize_clause(const Clause& clause) {
  std::ostringstream out;
  out << "cnf(" << name_text(clause.label) << ", " << role_name(clause.role)
      << ", ";
  if (clause.empty()) {
    out << "$false";
  } else {
    for (std::size_t i = 0; i < clause.literals.size(); ++i) {
      if (i > 0) out << " | ";
      write_literal(out, clause.literals[i]);
    }
  }
  out << ").";
  return out.str();
}

}  // namespace satrl
