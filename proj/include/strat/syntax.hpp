#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace strat {

// U is the strongest level; the numeric order doubles as "weaker than".
enum class Strength { U = 0, I = 1, D = 2 };

char strength_letter(Strength s);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t col);
  std::size_t line, col;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  enum class Kind { Constant, Variable, Application };
  Kind kind = Kind::Constant;
  std::string sym;
  std::vector<Term> args;

  static Term constant(std::string s) { return {Kind::Constant, std::move(s), {}}; }
  static Term variable(std::string s) { return {Kind::Variable, std::move(s), {}}; }
  static Term app(std::string f, std::vector<Term> a) {
    return {Kind::Application, std::move(f), std::move(a)};
  }

  bool is_symbol() const { return kind != Kind::Application; }
  bool sentential() const { return kind == Kind::Application && !sym.empty() && sym[0] == '$'; }
  bool operator==(const Term&) const = default;
};

struct Atom {
  std::string predicate;  // never carries a strength prefix
  std::vector<Term> args;
  Strength strength = Strength::U;
  bool operator==(const Atom&) const = default;

  // predicate with its prefix re-attached, e.g. "I-MARRIED"
  std::string prefixed() const;
};

struct Formula {
  enum class Kind { Atomic, Not, And, Or, Implies, Iff, Exists, Forall, Uttered, ForallUtt };
  Kind kind = Kind::Atomic;
  Atom atom;                     // Atomic
  std::vector<Formula> sub;      // children
  std::vector<std::string> vars; // Exists/Forall: one; ForallUtt: params

  static Formula atomic(Atom a);
  static Formula neg(Formula f);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula exists(std::string v, Formula body);
  static Formula forall(std::string v, Formula body);
  static Formula uttered(Formula f);
  static Formula forallutt(std::vector<std::string> params, Formula body);

  bool is_literal() const {
    return kind == Kind::Atomic || (kind == Kind::Not && sub[0].kind == Kind::Atomic);
  }
  bool operator==(const Formula&) const = default;
};

struct Theory {
  std::vector<Formula> formulas;
  bool analyzable() const { return !formulas.empty(); }
};

Theory parse_theory(const std::string& text);
Formula parse_formula(const std::string& text);  // exactly one formula
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

Formula negate(const Formula& f);
Strength strength_of(const Formula& lit);
Formula set_strength(const Formula& lit, Strength s);
const Atom& atom_of(const Formula& lit);
bool is_negative(const Formula& lit);

// Every symbol occurring anywhere in the theory (predicates, functions, terms, binders).
std::vector<std::string> symbols_of(const Theory& t);

}  // namespace strat
