#include "strat/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "strat/engine.hpp"

namespace strat {

const char* truth_name(TruthValue v) {
  switch (v) {
    case TruthValue::Tu: return "T_u";
    case TruthValue::Fu: return "F_u";
    case TruthValue::Ti: return "T_i";
    case TruthValue::Fi: return "F_i";
    case TruthValue::Td: return "T_d";
    case TruthValue::Fd: return "F_d";
  }
  return "?";
}

std::string atom_key(const Atom& a) {
  Atom u = a;
  u.strength = Strength::U;
  return print_formula(Formula::atomic(u));
}

namespace {
using TV = TruthValue;

bool in(TV v, std::initializer_list<TV> s) { return std::find(s.begin(), s.end(), v) != s.end(); }
}  // namespace

bool literal_satisfied(TV v, Strength s, bool negative, Strength x) {
  using S = Strength;
  if (!negative) {
    switch (x) {
      case S::U:
        if (s == S::U) return v == TV::Tu;
        if (s == S::I) return in(v, {TV::Tu, TV::Fu, TV::Ti});
        return in(v, {TV::Tu, TV::Fu, TV::Ti, TV::Fi, TV::Td});
      case S::I:
        if (s == S::D) return in(v, {TV::Ti, TV::Fi, TV::Td});
        return v == TV::Ti;
      case S::D:
        return v == TV::Td;
    }
  } else {
    switch (x) {
      case S::U:
        if (s == S::U) return v == TV::Fu;
        if (s == S::I) return in(v, {TV::Tu, TV::Fu, TV::Fi});
        return in(v, {TV::Tu, TV::Fu, TV::Ti, TV::Fi, TV::Fd});
      case S::I:
        if (s == S::D) return in(v, {TV::Ti, TV::Fi, TV::Fd});
        return v == TV::Fi;
      case S::D:
        return v == TV::Fd;
    }
  }
  return false;
}

namespace {

TV lookup(const Valuation& v, const Atom& a) {
  for (const Term& t : a.args)
    if (t.kind == Term::Kind::Variable) throw std::invalid_argument("non-ground atom " + atom_key(a));
  auto it = v.find(atom_key(a));
  if (it == v.end()) throw std::invalid_argument("valuation lacks atom " + atom_key(a));
  return it->second;
}

bool sat(const Valuation& v, const Formula& f, Strength x, bool positive);

// positive == false means "x-satisfies the negation of f"
bool sat(const Valuation& v, const Formula& f, Strength x, bool positive) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atomic:
      return literal_satisfied(lookup(v, f.atom), f.atom.strength, !positive, x);
    case K::Not:
      return sat(v, f.sub[0], x, !positive);
    case K::Uttered:
      return sat(v, f.sub[0], x, positive);
    case K::And:
      if (positive)
        return std::all_of(f.sub.begin(), f.sub.end(), [&](const Formula& g) { return sat(v, g, x, true); });
      return std::any_of(f.sub.begin(), f.sub.end(), [&](const Formula& g) { return sat(v, g, x, false); });
    case K::Or:
      if (positive)
        return std::any_of(f.sub.begin(), f.sub.end(), [&](const Formula& g) { return sat(v, g, x, true); });
      return std::all_of(f.sub.begin(), f.sub.end(), [&](const Formula& g) { return sat(v, g, x, false); });
    case K::Implies:
      if (positive) return sat(v, f.sub[0], x, false) || sat(v, f.sub[1], x, true);
      return sat(v, f.sub[0], x, true) && sat(v, f.sub[1], x, false);
    case K::Iff: {
      const Formula& a = f.sub[0];
      const Formula& b = f.sub[1];
      if (positive)
        return (sat(v, a, x, false) || sat(v, b, x, true)) && (sat(v, b, x, false) || sat(v, a, x, true));
      // ¬(a ↔ b) is read as a ↔ ¬b
      return (sat(v, a, x, false) || sat(v, b, x, false)) && (sat(v, b, x, true) || sat(v, a, x, true));
    }
    case K::Exists:
    case K::Forall:
    case K::ForallUtt:
      throw std::invalid_argument("oracle needs quantifier-free input: " + print_formula(f));
  }
  return false;
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind == Formula::Kind::Atomic) {
    std::string k = atom_key(f.atom);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  for (const Formula& g : f.sub) collect_atoms(g, out);
}

const TV kAll[] = {TV::Tu, TV::Fu, TV::Ti, TV::Fi, TV::Td, TV::Fd};

bool search(const std::vector<const Formula*>& fs, const std::vector<std::string>& atoms, std::size_t i,
            Valuation& v, Strength x) {
  if (i == atoms.size()) {
    return std::all_of(fs.begin(), fs.end(), [&](const Formula* f) { return sat(v, *f, x, true); });
  }
  for (TV t : kAll) {
    v[atoms[i]] = t;
    if (search(fs, atoms, i + 1, v, x)) return true;
  }
  v.erase(atoms[i]);
  return false;
}

}  // namespace

bool x_satisfies(const Valuation& v, const Formula& f, Strength x) { return sat(v, f, x, true); }

std::vector<std::string> atom_universe(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const Formula& f : fs) collect_atoms(f, out);
  return out;
}

SatResult x_satisfiable(const std::vector<Formula>& fs, Strength x, std::size_t cap) {
  // union-find over formulas sharing atoms
  std::vector<std::vector<std::string>> atoms(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) collect_atoms(fs[i], atoms[i]);
  std::vector<std::size_t> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& a : atoms[i]) {
      auto [it, fresh] = owner.emplace(a, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fs.size(); ++i) groups[find(i)].push_back(i);

  SatResult res;
  Valuation witness;
  for (const auto& [root, members] : groups) {
    std::vector<const Formula*> part;
    std::vector<std::string> univ;
    for (std::size_t i : members) {
      part.push_back(&fs[i]);
      for (const auto& a : atoms[i])
        if (std::find(univ.begin(), univ.end(), a) == univ.end()) univ.push_back(a);
    }
    if (univ.size() > cap)
      throw OracleCapExceeded("atom universe of " + std::to_string(univ.size()) + " exceeds cap " +
                              std::to_string(cap));
    Valuation v;
    if (!search(part, univ, 0, v, x)) return res;
    witness.insert(v.begin(), v.end());
  }
  res.satisfiable = true;
  res.witness = std::move(witness);
  return res;
}

namespace {
Term subst_term(const Term& t, const std::string& var, const std::string& val) {
  if (t.is_symbol()) return t.sym == var ? Term::constant(val) : t;
  Term r = t;
  for (Term& a : r.args) a = subst_term(a, var, val);
  return r;
}

Formula instantiate(const Formula& f, const std::string& var, const std::string& val) {
  Formula r = f;
  if (r.kind == Formula::Kind::Atomic) {
    for (Term& a : r.atom.args) a = subst_term(a, var, val);
    return r;
  }
  if ((r.kind == Formula::Kind::Exists || r.kind == Formula::Kind::Forall) && r.vars[0] == var) return r;
  for (Formula& g : r.sub) g = instantiate(g, var, val);
  return r;
}
}  // namespace

Formula ground_expand(const Formula& f, const std::vector<std::string>& domain) {
  using K = Formula::Kind;
  if (f.kind == K::Exists || f.kind == K::Forall) {
    std::vector<Formula> parts;
    for (const auto& c : domain) parts.push_back(ground_expand(instantiate(f.sub[0], f.vars[0], c), domain));
    return f.kind == K::Exists ? Formula::disj(std::move(parts)) : Formula::conj(std::move(parts));
  }
  if (f.kind == K::ForallUtt) throw std::invalid_argument("forallutt has no ground expansion");
  Formula r = f;
  for (Formula& g : r.sub) g = ground_expand(g, domain);
  return r;
}

namespace {
bool closed_at(const std::vector<Formula>& lits, Strength x) {
  for (const Formula& l : lits) {
    if (is_negative(l) || strength_of(l) > x) continue;
    for (const Formula& m : lits) {
      if (!is_negative(m) || strength_of(m) > x) continue;
      const Atom& a = atom_of(l);
      const Atom& b = atom_of(m);
      if (a.predicate == b.predicate && a.args == b.args) return true;
    }
  }
  return false;
}
}  // namespace

CrossCheck cross_check(const Theory& theory, std::size_t cap) {
  CrossCheck out;
  auto univ = atom_universe(theory.formulas);
  if (univ.size() > cap) throw OracleCapExceeded("cross_check universe exceeds cap");
  std::vector<std::vector<Formula>> branches;
  try {
    branches = find_models(theory);
  } catch (const EngineError& e) {
    out.skipped = true;
    out.detail = e.what();
    return out;
  }
  for (Strength x : {Strength::U, Strength::I, Strength::D}) {
    bool oracle = x_satisfiable(theory.formulas, x, cap).satisfiable;
    bool engine = std::any_of(branches.begin(), branches.end(),
                              [&](const std::vector<Formula>& b) { return !closed_at(b, x); });
    if (oracle != engine) {
      out.ok = false;
      std::string th;
      for (const Formula& f : theory.formulas) th += print_formula(f) + " ";
      out.detail += std::string("level ") + strength_letter(x) + ": oracle " + (oracle ? "sat" : "unsat") +
                    ", engine " + (engine ? "open" : "closed") + " for { " + th + "}\n";
    }
  }
  return out;
}

}  // namespace strat
