#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strat/oracle.hpp"
#include "strat/report.hpp"

namespace {

enum Exit { kOk = 0, kFalseUtterance = 2, kInfelicitous = 3, kError = 4, kCorpusMismatch = 5 };

int verdict_exit(strat::Verdict v) {
  switch (v) {
    case strat::Verdict::Ok: return kOk;
    case strat::Verdict::FalseUtterance: return kFalseUtterance;
    case strat::Verdict::Infelicitous: return kInfelicitous;
  }
  return kError;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json oracle_section(const strat::Theory& theory, const strat::AnalysisReport& rep) {
  nlohmann::json out;
  nlohmann::json bridge = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.schemata.size(); ++i) {
    bool sat = strat::x_satisfiable(strat::literals_of(rep.schemata[i]), strat::Strength::I).satisfiable;
    bridge.push_back({{"index", i}, {"i_satisfiable", sat}, {"agrees", sat == rep.felicitous_flag[i]}});
  }
  out["felicity_bridge"] = bridge;
  try {
    auto cc = strat::cross_check(theory);
    out["cross_check"] = cc.skipped ? "skipped: " + cc.detail : cc.ok ? std::string("agree") : cc.detail;
  } catch (const std::exception& e) {
    out["cross_check"] = std::string("skipped: ") + e.what();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratified-logic tableau reasoner: model schemata, felicity and presuppositions"};
  std::vector<std::string> inputs;
  std::vector<std::string> additions;
  bool machine = false, human = false, oracle = false;
  std::size_t depth_cap = 8;
  std::string corpus;
  app.add_option("inputs", inputs, "Theory files");
  app.add_flag("--machine", machine, "Emit the JSON report");
  app.add_flag("--human", human, "Emit the tabular report (default)");
  app.add_option("--add", additions, "Utterance appended in sequence; one report per prefix");
  app.add_option("--depth-cap", depth_cap, "Instantiation depth cap")->check(CLI::PositiveNumber);
  app.add_flag("--oracle", oracle, "Cross-check schemata against the brute-force oracle");
  app.add_option("--corpus", corpus, "Run every <case>.thy/<case>.json pair in a directory");
  CLI11_PARSE(app, argc, argv);

  strat::EngineOptions opts;
  opts.depth_cap = depth_cap;

  if (!corpus.empty()) {
    try {
      auto sum = strat::run_corpus(corpus, opts, std::cout);
      return sum.ok() ? kOk : kCorpusMismatch;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kError;
    }
  }
  if (inputs.empty()) {
    std::cerr << "error: no input theory (see --help)\n";
    return kError;
  }
  if (!machine && !human) human = true;

  std::vector<strat::Formula> adds;
  try {
    for (const auto& a : additions) adds.push_back(strat::parse_formula(a));
  } catch (const std::exception& e) {
    std::cerr << "error: --add: " << e.what() << "\n";
    return kError;
  }

  int status = kOk;
  for (const auto& path : inputs) {
    std::vector<strat::AnalysisReport> reps;
    strat::Theory theory;
    try {
      theory = strat::parse_theory(slurp(path));
      reps = strat::analyze_sequence(theory, adds, opts);
    } catch (const std::exception& e) {
      std::cerr << path << ": error: " << e.what() << "\n";
      status = kError;
      continue;
    }
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const auto& rep = reps[k];
      if (reps.size() > 1 && human) std::cout << ";; " << path << " + " << k << " addition(s)\n";
      if (human) std::cout << strat::render_human(rep) << "\n";
      if (machine || oracle) {
        nlohmann::json j = strat::to_json(rep);
        j["input"] = path;
        if (reps.size() > 1) j["step"] = k;
        if (oracle) {
          strat::Theory t = theory;
          t.formulas.insert(t.formulas.end(), adds.begin(), adds.begin() + static_cast<std::ptrdiff_t>(k));
          j["oracle"] = oracle_section(t, rep);
        }
        if (machine) std::cout << j.dump(2) << "\n";
        else std::cout << "ORACLE\n" << j["oracle"].dump(2) << "\n";
      }
      status = std::max(status, verdict_exit(rep.verdict));
    }
  }
  return status;
}
