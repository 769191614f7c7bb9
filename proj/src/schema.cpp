#include "strat/schema.hpp"

#include <algorithm>
#include <stdexcept>

namespace strat {

std::string AtomKey::str() const {
  Atom a{predicate, args, Strength::U};
  return print_formula(Formula::atomic(a));
}

const SchemaRow* ModelSchema::find(const AtomKey& k) const {
  for (const SchemaRow& r : rows)
    if (r.key == k) return &r;
  return nullptr;
}

ModelSchema arrange(const std::vector<Formula>& literals) {
  ModelSchema m;
  for (const Formula& l : literals) {
    const Atom& a = atom_of(l);
    AtomKey k{a.predicate, a.args};
    auto it = std::find_if(m.rows.begin(), m.rows.end(), [&](const SchemaRow& r) { return r.key == k; });
    if (it == m.rows.end()) it = m.rows.insert(m.rows.begin(), SchemaRow{k, {}});
    int base = 0;
    switch (a.strength) {
      case Strength::U: base = UAff; break;
      case Strength::I: base = IAff; break;
      case Strength::D: base = DAff; break;
      default: throw std::invalid_argument("unknown strength");
    }
    it->flags[static_cast<std::size_t>(base + (is_negative(l) ? 1 : 0))] = true;
  }
  return m;
}

std::vector<Formula> literals_of(const ModelSchema& m) {
  std::vector<Formula> out;
  for (auto r = m.rows.rbegin(); r != m.rows.rend(); ++r)
    for (std::size_t i = 0; i < 6; ++i)
      if (r->flags[i]) {
        Formula f = Formula::atomic(Atom{r->key.predicate, r->key.args, static_cast<Strength>(i / 2)});
        out.push_back(i % 2 ? Formula::neg(std::move(f)) : std::move(f));
      }
  return out;
}

bool is_felicitous(const ModelSchema& m) {
  for (const SchemaRow& r : m.rows) {
    const auto& f = r.flags;
    if ((f[UAff] && f[INeg]) || (f[UNeg] && f[IAff]) || (f[IAff] && f[INeg])) return false;
  }
  return true;
}

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Affirmative: return "affirmative";
    case Polarity::Negative: return "negative";
    case Polarity::SelfCancelled: return "self-cancelled";
  }
  return "?";
}

std::pair<Polarity, Strength> polarity_and_level(const SchemaRow& row) {
  bool aff = row.affirmative(), neg = row.negative();
  if (!aff && !neg) throw std::invalid_argument("empty schema row");
  std::size_t first = 0;
  while (!row.flags[first]) ++first;
  Strength s = static_cast<Strength>(first / 2);
  if (aff && neg) return {Polarity::SelfCancelled, s};
  return {aff ? Polarity::Affirmative : Polarity::Negative, s};
}

namespace {

struct Profile {
  int aff = -1;  // -1 unset, 1 yes, 0 no
  bool cancel = false;
  std::vector<int> where;
};

Profile profile(const SchemaRow& r) {
  Profile p;
  for (int i = 0; i < 6; ++i) {
    if (!r.flags[static_cast<std::size_t>(i)]) continue;
    int pol = i % 2 == 0 ? 1 : 0;
    if (p.aff < 0) p.aff = pol;
    if (p.aff != pol) p.cancel = true;
    p.where.push_back(i + 1);
  }
  return p;
}

}  // namespace

bool more_optimistic(const ModelSchema& m1, const ModelSchema& m2) {
  for (const SchemaRow& x : m2.rows) {
    const SchemaRow* y = m1.find(x.key);
    if (!y) return false;
    Profile p1 = profile(*y), p2 = profile(x);
    if (!p1.cancel && p2.cancel) continue;
    if (p1.aff != p2.aff) return false;
    if (p1.where != p2.where &&
        std::includes(p2.where.begin(), p2.where.end(), p1.where.begin(), p1.where.end()))
      return false;
    if (p1.where.back() < p2.where.back()) return false;
  }
  return true;
}

std::vector<std::size_t> minimal_indices(const std::vector<ModelSchema>& ms) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ms.size() && !dominated; ++j)
      dominated = j != i && more_optimistic(ms[j], ms[i]);
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

std::vector<ModelSchema> minimal_models(const std::vector<ModelSchema>& ms) {
  std::vector<ModelSchema> out;
  for (std::size_t i : minimal_indices(ms)) out.push_back(ms[i]);
  return out;
}

std::string flag_string(const SchemaRow& r) {
  std::string s;
  for (bool b : r.flags) s += b ? '*' : '.';
  return s;
}

std::vector<std::string> canonical_rows(const ModelSchema& m) {
  std::vector<std::string> out;
  for (const SchemaRow& r : m.rows) out.push_back(r.key.str() + " " + flag_string(r));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_schema(const ModelSchema& a, const ModelSchema& b) { return canonical_rows(a) == canonical_rows(b); }

}  // namespace strat
