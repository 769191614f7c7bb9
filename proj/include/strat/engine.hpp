#pragma once

#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strat/syntax.hpp"

namespace strat {

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  std::size_t depth_cap = 8;       // max nesting of a ∀-instantiation target
  std::size_t step_cap = 2000000;  // max tableau steps per analysis run
};

using Tuple = std::vector<std::string>;
// Newest entries first, both for keys and for tuples under a key.
using InstMap = std::vector<std::pair<std::string, std::vector<Tuple>>>;

struct BranchState {
  std::deque<Formula> gamma;
  std::vector<Formula> model;  // newest literal first
  std::set<std::string> delta;
  InstMap inst_map;
  std::size_t skolem_counter = 0;
  std::set<std::string> reserved;  // user symbols a skolem constant must avoid

  bool in_model(const Formula& lit) const;
};

struct BranchResult {
  std::vector<Formula> literals;
  InstMap inst_map;
};

// Returns false when the literal u-contradicts the branch (branch failure).
bool add_to_model(BranchState& st, const Formula& lit, bool from_utterance);

std::vector<Term> ground_terms(const BranchState& st);

std::string skolem_constant(BranchState& st);

// Plain substitution of `val` for every occurrence of symbol `var`; rebinding is not respected.
Formula substitute(const Formula& f, const std::string& var, const Term& val);

std::vector<BranchResult> expand(const Theory& theory, const EngineOptions& opts = {});

std::vector<std::vector<Formula>> find_models(const Theory& theory, const EngineOptions& opts = {});

struct Entailment {
  bool entailed = false;
  std::vector<std::vector<Formula>> countermodels;
};

Entailment entails(const Theory& theory, const Formula& phi, const EngineOptions& opts = {});

}  // namespace strat
