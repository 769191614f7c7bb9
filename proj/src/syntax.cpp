#include "strat/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace strat {

char strength_letter(Strength s) {
  switch (s) {
    case Strength::U: return 'U';
    case Strength::I: return 'I';
    case Strength::D: return 'D';
  }
  return '?';
}

SyntaxError::SyntaxError(const std::string& msg, std::size_t l, std::size_t c)
    : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
      line(l), col(c) {}

std::string Atom::prefixed() const {
  if (strength == Strength::U) return predicate;
  return std::string(1, strength_letter(strength)) + "-" + predicate;
}

Formula Formula::atomic(Atom a) {
  Formula f;
  f.kind = Kind::Atomic;
  f.atom = std::move(a);
  return f;
}
Formula Formula::neg(Formula g) {
  Formula f;
  f.kind = Kind::Not;
  f.sub.push_back(std::move(g));
  return f;
}
Formula Formula::conj(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::And;
  f.sub = std::move(fs);
  return f;
}
Formula Formula::disj(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::Or;
  f.sub = std::move(fs);
  return f;
}
Formula Formula::implies(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Implies;
  f.sub = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::iff(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Iff;
  f.sub = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::exists(std::string v, Formula body) {
  Formula f;
  f.kind = Kind::Exists;
  f.vars = {std::move(v)};
  f.sub.push_back(std::move(body));
  return f;
}
Formula Formula::forall(std::string v, Formula body) {
  Formula f;
  f.kind = Kind::Forall;
  f.vars = {std::move(v)};
  f.sub.push_back(std::move(body));
  return f;
}
Formula Formula::uttered(Formula g) {
  Formula f;
  f.kind = Kind::Uttered;
  f.sub.push_back(std::move(g));
  return f;
}
Formula Formula::forallutt(std::vector<std::string> params, Formula body) {
  Formula f;
  f.kind = Kind::ForallUtt;
  f.vars = std::move(params);
  f.sub.push_back(std::move(body));
  return f;
}

namespace {

struct Sexp {
  bool is_list = false;
  std::string sym;
  std::vector<Sexp> items;
  std::size_t line = 1, col = 1;
};

class Reader {
 public:
  explicit Reader(const std::string& s) : src_(s) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    for (;;) {
      skip();
      if (pos_ >= src_.size()) break;
      out.push_back(read());
    }
    return out;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Sexp read() {
    Sexp e;
    e.line = line_;
    e.col = col_;
    char c = src_[pos_];
    if (c == ')') throw SyntaxError("unbalanced ')'", line_, col_);
    if (c == '(') {
      e.is_list = true;
      advance();
      for (;;) {
        skip();
        if (pos_ >= src_.size()) throw SyntaxError("unbalanced '(': missing ')'", e.line, e.col);
        if (src_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    while (pos_ < src_.size()) {
      c = src_[pos_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      e.sym.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      advance();
    }
    return e;
  }
};

std::string where(const Sexp& e) {
  return " (line " + std::to_string(e.line) + ", column " + std::to_string(e.col) + ")";
}

bool conventional_variable(const std::string& s) {
  if (s.empty() || (s[0] != 'X' && s[0] != 'Y' && s[0] != 'Z' && s[0] != 'W')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void split_prefix(const std::string& head, std::string& base, Strength& s) {
  s = Strength::U;
  base = head;
  if (head.size() > 2 && head[1] == '-') {
    switch (head[0]) {
      case 'U': s = Strength::U; base = head.substr(2); break;
      case 'I': s = Strength::I; base = head.substr(2); break;
      case 'D': s = Strength::D; base = head.substr(2); break;
      default: break;
    }
  }
}

const std::set<std::string> kKeywords = {"NOT", "AND", "OR", "IMPLIES", "IFF",
                                         "EXISTS", "FORALL", "UTTERED", "FORALLUTT"};

class Builder {
 public:
  Formula formula(const Sexp& e, bool in_utterance) {
    if (!e.is_list) {
      if (kKeywords.count(e.sym)) throw StructuralError("connective '" + e.sym + "' used as an atom" + where(e));
      return Formula::atomic(atom(e.sym, {}));
    }
    if (e.items.empty()) throw StructuralError("empty list where a formula was expected" + where(e));
    const Sexp& h = e.items[0];
    if (h.is_list) throw StructuralError("formula head must be a symbol" + where(e));
    const std::string& op = h.sym;
    auto arity = [&](std::size_t n) {
      if (e.items.size() != n + 1)
        throw StructuralError(op + " expects " + std::to_string(n) + " argument(s)" + where(e));
    };
    if (op == "NOT") {
      arity(1);
      return Formula::neg(formula(e.items[1], in_utterance));
    }
    if (op == "AND" || op == "OR") {
      std::vector<Formula> fs;
      for (std::size_t i = 1; i < e.items.size(); ++i) fs.push_back(formula(e.items[i], in_utterance));
      return op == "AND" ? Formula::conj(std::move(fs)) : Formula::disj(std::move(fs));
    }
    if (op == "IMPLIES" || op == "IFF") {
      arity(2);
      Formula a = formula(e.items[1], in_utterance);
      Formula b = formula(e.items[2], in_utterance);
      return op == "IMPLIES" ? Formula::implies(std::move(a), std::move(b))
                             : Formula::iff(std::move(a), std::move(b));
    }
    if (op == "EXISTS" || op == "FORALL") {
      arity(2);
      if (e.items[1].is_list) throw StructuralError(op + " variable must be a symbol" + where(e.items[1]));
      const std::string& v = e.items[1].sym;
      bound_.push_back(v);
      Formula body = formula(e.items[2], in_utterance);
      bound_.pop_back();
      return op == "EXISTS" ? Formula::exists(v, std::move(body)) : Formula::forall(v, std::move(body));
    }
    if (op == "UTTERED") {
      arity(1);
      if (in_utterance) throw StructuralError("nested uttered" + where(e));
      return Formula::uttered(formula(e.items[1], true));
    }
    if (op == "FORALLUTT") {
      arity(2);
      if (in_utterance) throw StructuralError("forallutt inside uttered is not supported" + where(e));
      const Sexp& ps = e.items[1];
      std::vector<std::string> params;
      if (!ps.is_list) throw StructuralError("forallutt parameters must be a list of symbols" + where(ps));
      for (const Sexp& p : ps.items) {
        if (p.is_list) throw StructuralError("forallutt parameter must be a symbol" + where(p));
        params.push_back(p.sym);
      }
      for (auto& p : params) bound_.push_back(p);
      Formula body = formula(e.items[2], false);
      bound_.resize(bound_.size() - params.size());
      if (body.kind != Formula::Kind::Implies || !body.sub[0].is_literal())
        throw StructuralError("forallutt body must be (implies literal formula)" + where(e.items[2]));
      return Formula::forallutt(std::move(params), std::move(body));
    }
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
    return Formula::atomic(atom(op, std::move(args)));
  }

 private:
  std::vector<std::string> bound_;

  Atom atom(const std::string& head, std::vector<Term> args) {
    Atom a;
    split_prefix(head, a.predicate, a.strength);
    a.args = std::move(args);
    return a;
  }

  Term term(const Sexp& e) {
    if (!e.is_list) {
      bool bound = std::find(bound_.begin(), bound_.end(), e.sym) != bound_.end();
      return bound || conventional_variable(e.sym) ? Term::variable(e.sym) : Term::constant(e.sym);
    }
    if (e.items.empty()) throw StructuralError("empty term" + where(e));
    if (e.items[0].is_list) throw StructuralError("function symbol must be a symbol" + where(e));
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
    return Term::app(e.items[0].sym, std::move(args));
  }
};

}  // namespace

Theory parse_theory(const std::string& text) {
  Reader r(text);
  Theory t;
  Builder b;
  for (const Sexp& e : r.read_all()) {
    if (e.is_list && e.items.empty()) continue;  // () reads as NIL
    t.formulas.push_back(b.formula(e, false));
  }
  return t;
}

Formula parse_formula(const std::string& text) {
  Theory t = parse_theory(text);
  if (t.formulas.size() != 1)
    throw StructuralError("expected exactly one formula, got " + std::to_string(t.formulas.size()));
  return std::move(t.formulas[0]);
}

std::string print_term(const Term& t) {
  if (t.is_symbol()) return t.sym;
  std::string s = "(" + t.sym;
  for (const Term& a : t.args) s += " " + print_term(a);
  return s + ")";
}

namespace {
void print_into(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  auto list = [&](const char* op) {
    out += "(";
    out += op;
    for (const Formula& g : f.sub) {
      out += " ";
      print_into(g, out);
    }
    out += ")";
  };
  switch (f.kind) {
    case K::Atomic:
      if (f.atom.args.empty()) {
        out += f.atom.prefixed();
      } else {
        out += "(" + f.atom.prefixed();
        for (const Term& a : f.atom.args) out += " " + print_term(a);
        out += ")";
      }
      return;
    case K::Not: list("NOT"); return;
    case K::And: list("AND"); return;
    case K::Or: list("OR"); return;
    case K::Implies: list("IMPLIES"); return;
    case K::Iff: list("IFF"); return;
    case K::Uttered: list("UTTERED"); return;
    case K::Exists:
    case K::Forall:
      out += f.kind == K::Exists ? "(EXISTS " : "(FORALL ";
      out += f.vars[0] + " ";
      print_into(f.sub[0], out);
      out += ")";
      return;
    case K::ForallUtt: {
      out += "(FORALLUTT (";
      for (std::size_t i = 0; i < f.vars.size(); ++i) out += (i ? " " : "") + f.vars[i];
      out += ") ";
      print_into(f.sub[0], out);
      out += ")";
      return;
    }
  }
}
}  // namespace

std::string print_formula(const Formula& f) {
  std::string s;
  print_into(f, s);
  return s;
}

Formula negate(const Formula& f) {
  if (f.kind == Formula::Kind::Not) return f.sub[0];
  return Formula::neg(f);
}

const Atom& atom_of(const Formula& lit) {
  if (lit.kind == Formula::Kind::Atomic) return lit.atom;
  if (lit.kind == Formula::Kind::Not && lit.sub[0].kind == Formula::Kind::Atomic) return lit.sub[0].atom;
  throw std::invalid_argument("not a literal: " + print_formula(lit));
}

bool is_negative(const Formula& lit) { return lit.kind == Formula::Kind::Not; }

Strength strength_of(const Formula& lit) { return atom_of(lit).strength; }

Formula set_strength(const Formula& lit, Strength s) {
  atom_of(lit);
  Formula r = lit;
  if (r.kind == Formula::Kind::Atomic)
    r.atom.strength = s;
  else
    r.sub[0].atom.strength = s;
  return r;
}

namespace {
void term_symbols(const Term& t, std::set<std::string>& out) {
  out.insert(t.sym);
  for (const Term& a : t.args) term_symbols(a, out);
}
void formula_symbols(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::Atomic) {
    out.insert(f.atom.predicate);
    for (const Term& a : f.atom.args) term_symbols(a, out);
  }
  for (const auto& v : f.vars) out.insert(v);
  for (const Formula& g : f.sub) formula_symbols(g, out);
}
}  // namespace

std::vector<std::string> symbols_of(const Theory& t) {
  std::set<std::string> s;
  for (const Formula& f : t.formulas) formula_symbols(f, s);
  return {s.begin(), s.end()};
}

}  // namespace strat
