#include "strat/engine.hpp"

#include <algorithm>

namespace strat {

using K = Formula::Kind;

bool BranchState::in_model(const Formula& lit) const {
  return std::find(model.begin(), model.end(), lit) != model.end();
}

namespace {

void flatten_symbols(const Term& t, Tuple& out) {
  out.push_back(t.sym);
  for (const Term& a : t.args) flatten_symbols(a, out);
}

Tuple utterance_tuple(const Atom& a) {
  Tuple flat;
  for (const Term& t : a.args) flatten_symbols(t, flat);
  Tuple out;
  for (auto& s : flat)
    if (s.empty() || s[0] != '$') out.push_back(s);
  return out;
}

}  // namespace

bool add_to_model(BranchState& st, const Formula& lit, bool from_utterance) {
  if (strength_of(lit) == Strength::U && st.in_model(negate(lit))) return false;
  if (!st.in_model(lit)) st.model.insert(st.model.begin(), lit);
  if (from_utterance) {
    const Atom& a = atom_of(lit);
    std::string key = a.prefixed();
    auto it = std::find_if(st.inst_map.begin(), st.inst_map.end(), [&](auto& e) { return e.first == key; });
    if (it != st.inst_map.end())
      it->second.insert(it->second.begin(), utterance_tuple(a));
    else
      st.inst_map.insert(st.inst_map.begin(), {key, {utterance_tuple(a)}});
  }
  return true;
}

namespace {

bool bound_in(const std::string& s, const std::vector<std::string>& vars) {
  return std::find(vars.begin(), vars.end(), s) != vars.end();
}

bool ground_term(const Term& t, const std::vector<std::string>& vars) {
  if (t.is_symbol()) return !bound_in(t.sym, vars);
  return std::all_of(t.args.begin(), t.args.end(), [&](const Term& a) { return ground_term(a, vars); });
}

void subterms(const Term& t, const std::vector<std::string>& vars, std::vector<Term>& out) {
  if (ground_term(t, vars)) out.push_back(t);
  for (const Term& a : t.args) subterms(a, vars, out);
}

void harvest(const Formula& f, std::vector<std::string>& vars, std::vector<Term>& out) {
  switch (f.kind) {
    case K::Atomic:
      // a 0-ary atom contributes nothing, as "(p)" does in the reference
      for (const Term& a : f.atom.args) subterms(a, vars, out);
      return;
    case K::Exists:
    case K::Forall:
    case K::ForallUtt: {
      std::size_t n = vars.size();
      vars.insert(vars.end(), f.vars.begin(), f.vars.end());
      harvest(f.sub[0], vars, out);
      vars.resize(n);
      return;
    }
    default:
      for (const Formula& g : f.sub) harvest(g, vars, out);
  }
}

}  // namespace

std::vector<Term> ground_terms(const BranchState& st) {
  std::vector<Term> all;
  std::vector<std::string> vars;
  for (const Formula& f : st.gamma) harvest(f, vars, all);
  for (const Formula& f : st.model) harvest(f, vars, all);
  std::vector<Term> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (std::find(all.begin() + static_cast<std::ptrdiff_t>(i) + 1, all.end(), all[i]) == all.end())
      out.push_back(all[i]);
  return out;
}

std::string skolem_constant(BranchState& st) {
  for (;;) {
    std::string c = "C" + std::to_string(st.skolem_counter++);
    if (!st.reserved.count(c)) return c;
  }
}

namespace {

Term subst_term(const Term& t, const std::string& var, const Term& val) {
  if (t.is_symbol()) return t.sym == var ? val : t;
  Term r = t;
  for (Term& a : r.args) a = subst_term(a, var, val);
  return r;
}

Formula subst(const Formula& f, const std::string& var, const Term& val) {
  Formula r = f;
  if (r.kind == K::Atomic) {
    for (Term& a : r.atom.args) a = subst_term(a, var, val);
    return r;
  }
  if (val.is_symbol())
    for (auto& v : r.vars)
      if (v == var) v = val.sym;
  for (Formula& g : r.sub) g = subst(g, var, val);
  return r;
}

std::size_t term_depth(const Term& t) {
  std::size_t d = 0;
  for (const Term& a : t.args) d = std::max(d, term_depth(a));
  return t.is_symbol() ? 0 : d + 1;
}

std::string tuples_key(const std::vector<Tuple>& ts) {
  std::string s;
  for (const Tuple& t : ts) {
    s += "(";
    for (const auto& x : t) s += x + " ";
    s += ")";
  }
  return s;
}

std::vector<Formula> negated_all(const std::vector<Formula>& fs) {
  std::vector<Formula> out;
  for (const Formula& g : fs) out.push_back(Formula::neg(g));
  return out;
}

class Expander {
 public:
  Expander(const EngineOptions& o, std::vector<BranchResult>& out) : opts_(o), out_(out) {}

  void run(BranchState st, std::size_t count) {
    for (;;) {
      if (count == 0 || st.gamma.empty()) {
        out_.push_back({st.model, st.inst_map});
        return;
      }
      if (++steps_ > opts_.step_cap)
        throw EngineError("tableau step cap of " + std::to_string(opts_.step_cap) + " exceeded");

      Formula phi = std::move(st.gamma.front());
      st.gamma.pop_front();
      const bool utt = phi.kind == K::Uttered;
      if (utt) phi = Formula(phi.sub[0]);
      auto push = [&](Formula g) { st.gamma.push_front(utt ? Formula::uttered(std::move(g)) : std::move(g)); };

      switch (phi.kind) {
        case K::Not: {
          const Formula& in = phi.sub[0];
          switch (in.kind) {
            case K::Not: push(in.sub[0]); break;
            case K::And: push(Formula::disj(negated_all(in.sub))); break;
            case K::Or: push(Formula::conj(negated_all(in.sub))); break;
            case K::Implies: push(Formula::conj({in.sub[0], Formula::neg(in.sub[1])})); break;
            case K::Iff: push(Formula::iff(in.sub[0], Formula::neg(in.sub[1]))); break;
            case K::Exists: push(Formula::forall(in.vars[0], Formula::neg(in.sub[0]))); break;
            case K::Forall: push(Formula::exists(in.vars[0], Formula::neg(in.sub[0]))); break;
            case K::Atomic:
              if (!add_to_model(st, phi, utt)) return;
              break;
            case K::ForallUtt:
              throw EngineError("unsupported construct: negated forallutt " + print_formula(phi));
            case K::Uttered:
              throw EngineError("unsupported construct: negated uttered " + print_formula(phi));
          }
          count = st.gamma.size();
          break;
        }
        case K::And:
          for (const Formula& g : phi.sub) push(g);
          count = st.gamma.size();
          break;
        case K::Or:
          for (const Formula& g : phi.sub) {
            BranchState next = st;
            next.gamma.push_front(utt ? Formula::uttered(g) : g);
            std::size_t n = next.gamma.size();
            run(std::move(next), n);
          }
          return;
        case K::Implies:
          push(Formula::disj({Formula::neg(phi.sub[0]), phi.sub[1]}));
          count = st.gamma.size();
          break;
        case K::Iff:
          push(Formula::conj({Formula::implies(phi.sub[0], phi.sub[1]), Formula::implies(phi.sub[1], phi.sub[0])}));
          count = st.gamma.size();
          break;
        case K::Exists:
          push(subst(phi.sub[0], phi.vars[0], Term::constant(skolem_constant(st))));
          count = st.gamma.size();
          break;
        case K::Forall: {
          bool again = false;
          auto gt = ground_terms(st);
          if (gt.empty()) {
            push(subst(phi.sub[0], phi.vars[0], Term::constant(skolem_constant(st))));
            again = true;
          } else {
            const std::string head = print_formula(phi) + "\x1f";
            for (const Term& x : gt) {
              if (x.sentential()) continue;
              std::string key = head + print_term(x);
              if (st.delta.count(key)) continue;
              if (term_depth(x) > opts_.depth_cap)
                throw EngineError("instantiation depth cap " + std::to_string(opts_.depth_cap) +
                                  " exceeded by term " + print_term(x));
              st.delta.insert(key);
              push(subst(phi.sub[0], phi.vars[0], x));
              again = true;
            }
          }
          st.gamma.push_back(utt ? Formula::uttered(phi) : phi);
          count = again ? st.gamma.size() : count - 1;
          break;
        }
        case K::ForallUtt: {
          if (utt) throw EngineError("unsupported construct: uttered forallutt");
          bool again = false;
          const Formula& body = phi.sub[0];
          const std::string ant = atom_of(body.sub[0]).prefixed();
          auto it = std::find_if(st.inst_map.begin(), st.inst_map.end(), [&](auto& e) { return e.first == ant; });
          if (it != st.inst_map.end() && !it->second.empty()) {
            std::string key = print_formula(phi) + "\x1e" + tuples_key(it->second);
            if (!st.delta.count(key)) {
              st.delta.insert(key);
              const std::vector<Tuple> tuples = it->second;
              for (const Tuple& tup : tuples) {
                Formula inst = body;
                std::size_t n = std::min(phi.vars.size(), tup.size());
                for (std::size_t i = 0; i < n; ++i) inst = subst(inst, phi.vars[i], Term::constant(tup[i]));
                st.gamma.push_front(std::move(inst));
              }
              again = true;
            }
          }
          st.gamma.push_back(phi);
          count = again ? st.gamma.size() : count - 1;
          break;
        }
        case K::Uttered:
          throw EngineError("unsupported construct: nested uttered");
        case K::Atomic:
          if (!add_to_model(st, phi, utt)) return;
          count = st.gamma.size();
          break;
      }
    }
  }

 private:
  const EngineOptions& opts_;
  std::vector<BranchResult>& out_;
  std::size_t steps_ = 0;
};

}  // namespace

Formula substitute(const Formula& f, const std::string& var, const Term& val) { return subst(f, var, val); }

std::vector<BranchResult> expand(const Theory& theory, const EngineOptions& opts) {
  BranchState st;
  for (const Formula& f : theory.formulas) st.gamma.push_back(f);
  for (auto& s : symbols_of(theory)) st.reserved.insert(s);
  std::vector<BranchResult> out;
  Expander ex(opts, out);
  std::size_t n = st.gamma.size();
  ex.run(std::move(st), n);
  return out;
}

std::vector<std::vector<Formula>> find_models(const Theory& theory, const EngineOptions& opts) {
  std::vector<std::vector<Formula>> out;
  std::set<std::vector<std::string>> seen;
  for (auto& b : expand(theory, opts)) {
    std::vector<std::string> key;
    for (const Formula& l : b.literals) key.push_back(print_formula(l));
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.push_back(std::move(b.literals));
  }
  return out;
}

Entailment entails(const Theory& theory, const Formula& phi, const EngineOptions& opts) {
  Theory t;
  t.formulas.push_back(negate(phi));
  t.formulas.insert(t.formulas.end(), theory.formulas.begin(), theory.formulas.end());
  Entailment e;
  e.countermodels = find_models(t, opts);
  e.entailed = e.countermodels.empty();
  return e;
}

}  // namespace strat
