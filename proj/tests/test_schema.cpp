#include <doctest.h>

#include "strat/schema.hpp"

using namespace strat;

namespace {
std::vector<Formula> lits(const std::string& src) { return parse_theory(src).formulas; }

const SchemaRow& row(const ModelSchema& m, const std::string& key) {
  for (const SchemaRow& r : m.rows)
    if (r.key.str() == key) return r;
  FAIL("missing row " << key);
  throw 0;
}

ModelSchema schema(std::initializer_list<std::pair<const char*, const char*>> rows) {
  ModelSchema m;
  for (auto [atom, flags] : rows) {
    SchemaRow r;
    Formula f = parse_formula(atom);
    r.key = {f.atom.predicate, f.atom.args};
    for (std::size_t i = 0; i < 6; ++i) r.flags[i] = flags[i] == '*';
    m.rows.push_back(r);
  }
  return m;
}
}  // namespace

TEST_CASE("arrange") {
  ModelSchema m = arrange(lits("(not (bachelor cousin)) (I-married cousin) (D-male cousin)"));
  REQUIRE(m.rows.size() == 3);
  CHECK(flag_string(row(m, "(BACHELOR COUSIN)")) == ".*....");
  CHECK(flag_string(row(m, "(MARRIED COUSIN)")) == "..*...");
  CHECK(flag_string(row(m, "(MALE COUSIN)")) == "....*.");
  CHECK(arrange({}).rows.empty());

  ModelSchema jm3 = arrange(lits("(not (come-party mary)) (D-come-party mary) (I-come-party mary)"));
  REQUIRE(jm3.rows.size() == 1);
  CHECK(flag_string(jm3.rows[0]) == ".**.*.");
}

TEST_CASE("arrange and literals_of invert each other") {
  auto ls = lits("(not (bachelor cousin)) (I-married cousin) (not (D-married cousin)) (male cousin)");
  ModelSchema m = arrange(ls);
  CHECK(same_schema(arrange(literals_of(m)), m));
  CHECK(literals_of(m).size() == ls.size());
}

TEST_CASE("is_felicitous") {
  CHECK_FALSE(is_felicitous(schema({{"(married cousin)", ".**..."}})));
  CHECK(is_felicitous(schema({{"(come-party mary)", ".*..*."}})));
  CHECK_FALSE(is_felicitous(schema({{"p", "..**.."}})));
  CHECK_FALSE(is_felicitous(schema({{"p", "*..*.."}})));
  CHECK(is_felicitous(schema({{"p", "*....*"}})));
  CHECK(is_felicitous(schema({{"p", "..*..*"}})));
}

TEST_CASE("polarity_and_level") {
  auto a = polarity_and_level(schema({{"p", "....*."}}).rows[0]);
  CHECK(a.first == Polarity::Affirmative);
  CHECK(a.second == Strength::D);
  CHECK(polarity_and_level(schema({{"p", ".*..*."}}).rows[0]).first == Polarity::SelfCancelled);
  auto n = polarity_and_level(schema({{"p", "...*.*"}}).rows[0]);
  CHECK(n.first == Polarity::Negative);
  CHECK(n.second == Strength::I);
}

TEST_CASE("more_optimistic: Tweety") {
  ModelSchema m0 = schema({{"b", "*....."}, {"p", ".*...."}, {"f", "....*."}});
  ModelSchema m1 = schema({{"b", "*....."}, {"f", ".*..*."}});
  CHECK(more_optimistic(m0, m1));
  CHECK_FALSE(more_optimistic(m1, m0));
}

TEST_CASE("more_optimistic: jm1") {
  ModelSchema m0 = schema({{"(regret john ($come-party mary))", ".*...."}, {"(come-party mary)", "..*.*."}});
  ModelSchema m1 = schema({{"(regret john ($come-party mary))", ".*...."}, {"(come-party mary)", "....*."}});
  CHECK(more_optimistic(m0, m1));
  CHECK_FALSE(more_optimistic(m1, m0));
}

TEST_CASE("more_optimistic: missing key and polarity mismatch") {
  ModelSchema a = schema({{"p", "*....."}});
  ModelSchema b = schema({{"p", "*....."}, {"q", "....*."}});
  CHECK_FALSE(more_optimistic(a, b));
  CHECK(more_optimistic(b, a));
  CHECK_FALSE(more_optimistic(schema({{"p", ".*...."}}), schema({{"p", "*....."}})));
}

TEST_CASE("minimal_models") {
  ModelSchema m0 = schema({{"b", "*....."}, {"p", ".*...."}, {"f", "....*."}});
  ModelSchema m1 = schema({{"b", "*....."}, {"f", ".*..*."}});
  auto out = minimal_models({m1, m0});
  REQUIRE(out.size() == 1);
  CHECK(same_schema(out[0], m0));
  CHECK(minimal_models({m1}).size() == 1);
  CHECK(minimal_models({}).empty());
}
