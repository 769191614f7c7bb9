#include "strat/pragmatics.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace strat {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::FalseUtterance: return "false_utterance";
    case Verdict::Infelicitous: return "infelicitous";
  }
  return "?";
}

std::vector<AtomKey> candidates(const std::vector<ModelSchema>& ms) {
  std::vector<AtomKey> out;
  for (const ModelSchema& m : ms)
    for (const SchemaRow& r : m.rows)
      if ((r.flags[DAff] || r.flags[DNeg]) && std::find(out.begin(), out.end(), r.key) == out.end())
        out.push_back(r.key);
  return out;
}

std::vector<SignedAtom> collect_presuppositions(const std::vector<ModelSchema>& ms, Diagnostics* diag) {
  std::vector<SignedAtom> out;
  for (const AtomKey& k : candidates(ms)) {
    int polarity = -1;  // 1 affirmative, 0 negative
    bool dropped = false;
    for (const ModelSchema& m : ms) {
      const SchemaRow* r = m.find(k);
      if (!r) continue;
      bool aff = r->affirmative(), neg = r->negative();
      if ((aff && neg) || (aff && polarity == 0) || (neg && polarity == 1)) {
        dropped = true;
        break;
      }
      polarity = aff ? 1 : 0;
    }
    if (dropped) {
      if (diag) diag->dropped_candidates.push_back(k);
      continue;
    }
    // every candidate carries a d-flag somewhere, so a polarity was observed
    assert(polarity >= 0);
    out.push_back(SignedAtom{k, polarity == 0});
  }
  return out;
}

AnalysisReport analyze(const Theory& theory, const EngineOptions& opts) {
  if (!theory.analyzable()) throw std::invalid_argument("cannot analyze an empty theory");
  AnalysisReport rep;
  std::vector<std::vector<std::string>> seen;
  for (const auto& lits : find_models(theory, opts)) {
    ModelSchema m = arrange(lits);
    auto canon = canonical_rows(m);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(std::move(canon));
    rep.schemata.push_back(std::move(m));
  }
  std::vector<ModelSchema> fel;
  for (std::size_t i = 0; i < rep.schemata.size(); ++i) {
    bool f = is_felicitous(rep.schemata[i]);
    rep.felicitous_flag.push_back(f);
    if (f) {
      rep.felicitous.push_back(i);
      fel.push_back(rep.schemata[i]);
    }
  }
  if (rep.schemata.empty()) {
    rep.verdict = Verdict::FalseUtterance;
    return rep;
  }
  if (fel.empty()) {
    rep.verdict = Verdict::Infelicitous;
    return rep;
  }
  rep.verdict = Verdict::Ok;
  std::vector<ModelSchema> opt;
  for (std::size_t i : minimal_indices(fel)) {
    rep.optimistic.push_back(rep.felicitous[i]);
    opt.push_back(fel[i]);
  }
  rep.presuppositions = collect_presuppositions(opt, &rep.diagnostics);
  return rep;
}

std::vector<AnalysisReport> analyze_sequence(const Theory& base, const std::vector<Formula>& utterances,
                                             const EngineOptions& opts) {
  for (const Formula& u : utterances)
    if (u.kind != Formula::Kind::Uttered)
      throw StructuralError("sequence addition is not an uttered formula: " + print_formula(u));
  std::vector<AnalysisReport> out;
  Theory t = base;
  out.push_back(analyze(t, opts));
  for (const Formula& u : utterances) {
    t.formulas.push_back(u);
    out.push_back(analyze(t, opts));
  }
  return out;
}

}  // namespace strat
