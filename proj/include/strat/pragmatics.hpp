#pragma once

#include <string>
#include <vector>

#include "strat/engine.hpp"
#include "strat/schema.hpp"

namespace strat {

struct SignedAtom {
  AtomKey key;
  bool negative = false;
  std::string str() const { return negative ? "(NOT " + key.str() + ")" : key.str(); }
  bool operator==(const SignedAtom&) const = default;
};

enum class Verdict { Ok, FalseUtterance, Infelicitous };
const char* verdict_name(Verdict v);

struct Diagnostics {
  std::vector<AtomKey> dropped_candidates;  // extension: candidates lost to polarity conflicts
};

struct AnalysisReport {
  std::vector<ModelSchema> schemata;  // engine branch order, deduplicated
  std::vector<bool> felicitous_flag;
  std::vector<std::size_t> felicitous;  // indices into schemata
  std::vector<std::size_t> optimistic;  // indices into schemata
  std::vector<SignedAtom> presuppositions;
  Verdict verdict = Verdict::FalseUtterance;
  Diagnostics diagnostics;
};

std::vector<AtomKey> candidates(const std::vector<ModelSchema>& ms);
std::vector<SignedAtom> collect_presuppositions(const std::vector<ModelSchema>& ms,
                                                Diagnostics* diag = nullptr);

AnalysisReport analyze(const Theory& theory, const EngineOptions& opts = {});

// Report k analyzes base plus the first k utterances, from scratch.
std::vector<AnalysisReport> analyze_sequence(const Theory& base, const std::vector<Formula>& utterances,
                                             const EngineOptions& opts = {});

}  // namespace strat
