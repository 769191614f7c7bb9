#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strat/syntax.hpp"

namespace strat {

enum class TruthValue { Tu, Fu, Ti, Fi, Td, Fd };

const char* truth_name(TruthValue v);

// Atom keys are printed strength-free atoms, e.g. "(BACHELOR COUSIN)" or "P".
using Valuation = std::map<std::string, TruthValue>;

std::string atom_key(const Atom& a);

// Table lookup for a literal a^s / ¬a^s at level x.
bool literal_satisfied(TruthValue v, Strength s, bool negative, Strength x);

// f must be ground and quantifier-free (uttered is transparent). Throws
// std::invalid_argument otherwise or when an atom is missing from v.
bool x_satisfies(const Valuation& v, const Formula& f, Strength x);

struct SatResult {
  bool satisfiable = false;
  std::optional<Valuation> witness;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search, split into independent atom components; each component
// may hold at most `cap` atoms.
SatResult x_satisfiable(const std::vector<Formula>& fs, Strength x, std::size_t cap = 8);

// Replaces quantifiers by finite conjunctions/disjunctions over `domain`.
Formula ground_expand(const Formula& f, const std::vector<std::string>& domain);

std::vector<std::string> atom_universe(const std::vector<Formula>& fs);

struct CrossCheck {
  bool ok = true;
  bool skipped = false;  // engine hit its step cap; nothing compared
  std::string detail;    // counterexample description on mismatch
};

// Compares oracle x-satisfiability with engine branch x-openness for x in U, I, D.
CrossCheck cross_check(const Theory& theory, std::size_t cap = 4);

}  // namespace strat
