#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strat/report.hpp"

using namespace strat;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("human report sections") {
  auto r = analyze(parse_theory(slurp(fs::path(CORPUS_DIR) / "bac1.thy")));
  std::string h = render_human(r);
  CHECK(h.find("MODELS\n") == 0);
  CHECK(h.find("FELICITOUS-MODELS\n") != std::string::npos);
  CHECK(h.find("FELICITOUS-OPTIMISTIC-MODELS\n") != std::string::npos);
  auto p = h.find("PRESUPPOSITIONS\n");
  REQUIRE(p != std::string::npos);
  CHECK(h.find("(ADULT COUSIN)", p) != std::string::npos);
  CHECK(h.find("(MALE COUSIN)", p) != std::string::npos);
  CHECK(h.find("is infelicitous.") != std::string::npos);

  std::string jm4 = render_human(analyze(parse_theory(slurp(fs::path(CORPUS_DIR) / "jm4.thy"))));
  CHECK(jm4.find("The utterance is infelicitous") != std::string::npos);
  CHECK(jm4.find("PRESUPPOSITIONS") == std::string::npos);
}

TEST_CASE("asterisk columns") {
  auto r = analyze(parse_theory("(uttered (not (bachelor cousin))) (I-married cousin) (D-male cousin)"));
  std::string h = render_human(r);
  std::istringstream lines(h);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind(" (MARRIED", 0) == 0) CHECK(line.find('*') == 56);
    if (line.rfind(" (BACHELOR", 0) == 0) CHECK(line.find('*') == 47);
    if (line.rfind(" (MALE", 0) == 0) CHECK(line.find('*') == 71);
  }
}

TEST_CASE("machine report fields") {
  auto j = to_json(analyze(parse_theory(slurp(fs::path(CORPUS_DIR) / "jm3.thy"))));
  for (const char* k : {"models", "felicitous", "optimistic", "presuppositions", "verdict", "diagnostics"})
    CHECK(j.contains(k));
  CHECK(j["verdict"] == "ok");
  CHECK(j["diagnostics"]["dropped_candidates"].size() == 1);
}

TEST_CASE("normalize is idempotent and order-insensitive") {
  auto j = to_json(analyze(parse_theory(slurp(fs::path(CORPUS_DIR) / "or1-not.thy"))));
  auto n = normalize(j);
  CHECK(normalize(n) == n);
  auto shuffled = j;
  std::reverse(shuffled["models"].begin(), shuffled["models"].end());
  for (auto& m : shuffled["models"]) std::reverse(m["rows"].begin(), m["rows"].end());
  std::reverse(shuffled["presuppositions"].begin(), shuffled["presuppositions"].end());
  CHECK(normalize(shuffled) == n);
  CHECK(compare_reports(j, shuffled).empty());
}

TEST_CASE("run_corpus") {
  auto tmp = fs::temp_directory_path() / "strat_corpus_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  std::ostringstream out;
  CHECK(run_corpus(tmp, {}, out).ok());
  CHECK(out.str().find("warning") != std::string::npos);

  for (const char* n : {"bac1", "jm1", "jm3"}) {
    fs::copy_file(fs::path(CORPUS_DIR) / (std::string(n) + ".thy"), tmp / (std::string(n) + ".thy"));
    fs::copy_file(fs::path(CORPUS_DIR) / (std::string(n) + ".json"), tmp / (std::string(n) + ".json"));
  }
  std::ostringstream ok;
  auto s = run_corpus(tmp, {}, ok);
  CHECK(s.passed == 3);
  CHECK(s.failed == 0);

  // drop one expected presupposition: exactly one failure
  auto golden = nlohmann::json::parse(slurp(tmp / "bac1.json"));
  golden["presuppositions"].erase(0);
  std::ofstream(tmp / "bac1.json") << golden.dump(2);
  std::ostringstream bad;
  auto s2 = run_corpus(tmp, {}, bad);
  CHECK(s2.failed == 1);
  CHECK(s2.passed == 2);
  CHECK(bad.str().find("FAIL bac1") != std::string::npos);
  fs::remove_all(tmp);
}
