#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "strat/syntax.hpp"

namespace strat {

struct AtomKey {
  std::string predicate;
  std::vector<Term> args;
  bool operator==(const AtomKey&) const = default;
  std::string str() const;  // "(COME-PARTY MARY)"
};

// Flag positions: u_aff, u_neg, i_aff, i_neg, d_aff, d_neg.
enum Flag { UAff = 0, UNeg, IAff, INeg, DAff, DNeg };

struct SchemaRow {
  AtomKey key;
  std::array<bool, 6> flags{};
  bool operator==(const SchemaRow&) const = default;
  bool affirmative() const { return flags[UAff] || flags[IAff] || flags[DAff]; }
  bool negative() const { return flags[UNeg] || flags[INeg] || flags[DNeg]; }
};

struct ModelSchema {
  std::vector<SchemaRow> rows;  // most recently introduced key first
  const SchemaRow* find(const AtomKey& k) const;
};

ModelSchema arrange(const std::vector<Formula>& literals);
std::vector<Formula> literals_of(const ModelSchema& m);

bool is_felicitous(const ModelSchema& m);

enum class Polarity { Affirmative, Negative, SelfCancelled };
const char* polarity_name(Polarity p);
std::pair<Polarity, Strength> polarity_and_level(const SchemaRow& row);

bool more_optimistic(const ModelSchema& m1, const ModelSchema& m2);

// Keeps m iff no other schema is more optimistic; order preserved.
std::vector<ModelSchema> minimal_models(const std::vector<ModelSchema>& ms);
std::vector<std::size_t> minimal_indices(const std::vector<ModelSchema>& ms);

// Equality up to row order.
bool same_schema(const ModelSchema& a, const ModelSchema& b);
// Order-insensitive canonical rendering, used for dedup and golden comparison.
std::vector<std::string> canonical_rows(const ModelSchema& m);
std::string flag_string(const SchemaRow& r);  // e.g. "*..*.."

}  // namespace strat
