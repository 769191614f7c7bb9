#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "strat/pragmatics.hpp"

using namespace strat;

namespace {
Theory corpus(const std::string& name) {
  std::ifstream in(std::string(CORPUS_DIR) + "/" + name + ".thy");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_theory(ss.str());
}

std::vector<std::string> pres(const AnalysisReport& r) {
  std::vector<std::string> out;
  for (const auto& p : r.presuppositions) out.push_back(p.str());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModelSchema> optimistic(const AnalysisReport& r) {
  std::vector<ModelSchema> out;
  for (std::size_t i : r.optimistic) out.push_back(r.schemata[i]);
  return out;
}

std::vector<std::string> keys(const std::vector<AtomKey>& ks) {
  std::vector<std::string> out;
  for (const auto& k : ks) out.push_back(k.str());
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("candidates") {
  auto r = analyze(corpus("bac1"));
  CHECK(keys(candidates(optimistic(r))) == std::vector<std::string>{"(ADULT COUSIN)", "(MALE COUSIN)"});
  ModelSchema u = arrange(parse_theory("(p a) (not (q a))").formulas);
  CHECK(candidates({u}).empty());
}

TEST_CASE("collect_presuppositions") {
  CHECK(pres(analyze(corpus("bac1"))) == std::vector<std::string>{"(ADULT COUSIN)", "(MALE COUSIN)"});
  auto jm3 = analyze(corpus("jm3"));
  CHECK(jm3.presuppositions.empty());
  CHECK(keys(jm3.diagnostics.dropped_candidates) == std::vector<std::string>{"(COME-PARTY MARY)"});
  CHECK(pres(analyze(corpus("story5"))) ==
        std::vector<std::string>{"(EXISTS! C0)", "(MALE JOHN)", "(MISUNDERSTOOD HEARER SPEAKER)",
                                 "(NOT (DATE-WOMEN JOHN))"});
}

TEST_CASE("collect_presuppositions drops polarity conflicts across schemata") {
  ModelSchema a = arrange(parse_theory("(D-p k)").formulas);
  ModelSchema b = arrange(parse_theory("(not (D-p k))").formulas);
  Diagnostics d;
  CHECK(collect_presuppositions({a, b}, &d).empty());
  CHECK(d.dropped_candidates.size() == 1);
  auto neg = collect_presuppositions({b});
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].str() == "(NOT (P K))");
}

TEST_CASE("analyze verdicts") {
  auto jm4 = analyze(corpus("jm4"));
  CHECK(jm4.verdict == Verdict::Infelicitous);
  CHECK(jm4.schemata.size() == 2);
  CHECK(jm4.felicitous.empty());
  CHECK(jm4.presuppositions.empty());

  auto jms1 = analyze(corpus("jms1"));
  CHECK(jms1.verdict == Verdict::Ok);
  CHECK(jms1.optimistic.size() == 2);
  CHECK(pres(jms1) == std::vector<std::string>{"(COME-PARTY SUE)"});

  auto bad = analyze(parse_theory("p (not p)"));
  CHECK(bad.verdict == Verdict::FalseUtterance);
  CHECK(bad.schemata.empty());

  CHECK_THROWS_AS(analyze(parse_theory("")), std::invalid_argument);
}

TEST_CASE("analyze: monotone filtering and presupposition support") {
  for (const char* name : {"bac1", "bac2", "jm1", "jms1", "or1-not", "story5", "scalar", "ross2"}) {
    CAPTURE(name);
    auto r = analyze(corpus(name));
    for (std::size_t i : r.optimistic) CHECK(std::find(r.felicitous.begin(), r.felicitous.end(), i) != r.felicitous.end());
    for (std::size_t i : r.felicitous) CHECK(i < r.schemata.size());
    for (const SignedAtom& p : r.presuppositions) {
      bool supported = false;
      for (std::size_t i : r.optimistic) {
        const SchemaRow* row = r.schemata[i].find(p.key);
        if (!row) continue;
        CHECK_FALSE((row->affirmative() && row->negative()));
        CHECK((p.negative ? row->negative() : row->affirmative()));
        supported = supported || (p.negative ? row->flags[DNeg] : row->flags[DAff]);
      }
      CHECK(supported);
    }
  }
}

TEST_CASE("analyze_sequence") {
  Theory base = corpus("story5");
  base.formulas.erase(std::remove_if(base.formulas.begin(), base.formulas.end(),
                                     [](const Formula& f) { return f.kind == Formula::Kind::Uttered; }),
                      base.formulas.end());
  Theory full = corpus("story5");
  std::vector<Formula> adds;
  for (const Formula& f : full.formulas)
    if (f.kind == Formula::Kind::Uttered) adds.push_back(f);
  REQUIRE(adds.size() == 5);
  Theory phi1 = base;
  phi1.formulas.push_back(adds[0]);
  std::vector<Formula> rest(adds.begin() + 1, adds.end());
  auto reps = analyze_sequence(phi1, rest);
  REQUIRE(reps.size() == 5);
  auto p3 = pres(reps[2]);
  CHECK(std::find(p3.begin(), p3.end(), "(ADULT JOHN)") == p3.end());
  CHECK(std::find(p3.begin(), p3.end(), "(MALE JOHN)") != p3.end());
  CHECK(pres(reps[4]) == pres(analyze(full)));

  auto single = analyze_sequence(phi1, {});
  REQUIRE(single.size() == 1);
  CHECK(pres(single[0]) == pres(analyze(phi1)));

  CHECK_THROWS_AS(analyze_sequence(phi1, {parse_formula("(p a)")}), StructuralError);
}
