#include "strat/report.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace strat {

using nlohmann::json;

namespace {

const std::size_t kColumns[6] = {41, 47, 56, 62, 71, 77};

void render_schema(std::ostringstream& os, const ModelSchema& m, std::size_t number, bool felicitous) {
  os << " Model number " << number;
  if (!felicitous) os << " is infelicitous.";
  os << "\n Formulas                               Undefeasible   Infelicitous   Defeasible\n"
     << "                                        Aff   Neg      Aff   Neg      Aff   Neg\n";
  for (const SchemaRow& r : m.rows) {
    std::string line = " " + r.key.str();
    for (std::size_t i = 0; i < 6; ++i) {
      if (!r.flags[i]) continue;
      if (line.size() < kColumns[i]) line.resize(kColumns[i], ' ');
      else line += ' ';
      line += '*';
    }
    os << line << "\n";
  }
  os << "\n\n";
}

void render_list(std::ostringstream& os, const AnalysisReport& rep, const std::vector<std::size_t>& idx) {
  std::size_t n = 0;
  for (std::size_t i : idx) render_schema(os, rep.schemata[i], n++, rep.felicitous_flag[i]);
}

json schema_json(const AnalysisReport& rep, std::size_t i) {
  const ModelSchema& m = rep.schemata[i];
  json rows = json::array();
  for (const SchemaRow& r : m.rows) rows.push_back({{"atom", r.key.str()}, {"flags", flag_string(r)}});
  return {{"index", i}, {"felicitous", static_cast<bool>(rep.felicitous_flag[i])}, {"rows", rows}};
}

json normalize_schemata(const json& list) {
  std::vector<json> out;
  for (const json& s : list) {
    std::vector<std::string> rows;
    for (const json& r : s.at("rows")) rows.push_back(r.at("atom").get<std::string>() + " " + r.at("flags").get<std::string>());
    std::sort(rows.begin(), rows.end());
    out.push_back(rows);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string render_human(const AnalysisReport& rep) {
  std::ostringstream os;
  std::vector<std::size_t> all(rep.schemata.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  os << "MODELS\n";
  render_list(os, rep, all);
  if (rep.verdict == Verdict::FalseUtterance) {
    os << "The utterance is false\n";
    return os.str();
  }
  if (rep.verdict == Verdict::Infelicitous) {
    os << "The utterance is infelicitous\n";
    return os.str();
  }
  os << "FELICITOUS-MODELS\n";
  render_list(os, rep, rep.felicitous);
  os << "FELICITOUS-OPTIMISTIC-MODELS\n";
  render_list(os, rep, rep.optimistic);
  os << "PRESUPPOSITIONS\n";
  for (const SignedAtom& p : rep.presuppositions) os << p.str() << "\n";
  return os.str();
}

json to_json(const AnalysisReport& rep) {
  json models = json::array(), fel = json::array(), opt = json::array(), pres = json::array(),
       dropped = json::array();
  for (std::size_t i = 0; i < rep.schemata.size(); ++i) models.push_back(schema_json(rep, i));
  for (std::size_t i : rep.felicitous) fel.push_back(schema_json(rep, i));
  for (std::size_t i : rep.optimistic) opt.push_back(schema_json(rep, i));
  for (const SignedAtom& p : rep.presuppositions) pres.push_back(p.str());
  for (const AtomKey& k : rep.diagnostics.dropped_candidates) dropped.push_back(k.str());
  return {{"verdict", verdict_name(rep.verdict)},
          {"models", models},
          {"felicitous", fel},
          {"optimistic", opt},
          {"presuppositions", pres},
          {"diagnostics", {{"dropped_candidates", dropped}}}};
}

json normalize(const json& report) {
  if (report.contains("normalized")) return report;
  std::vector<std::string> pres = report.at("presuppositions").get<std::vector<std::string>>();
  std::sort(pres.begin(), pres.end());
  return {{"normalized", true},
          {"verdict", report.at("verdict")},
          {"models", normalize_schemata(report.at("models"))},
          {"felicitous", normalize_schemata(report.at("felicitous"))},
          {"optimistic", normalize_schemata(report.at("optimistic"))},
          {"presuppositions", pres}};
}

std::vector<std::string> compare_reports(const json& expected, const json& actual) {
  json e = normalize(expected), a = normalize(actual);
  std::vector<std::string> diffs;
  for (const char* field : {"verdict", "models", "felicitous", "optimistic", "presuppositions"}) {
    if (e.at(field) == a.at(field)) continue;
    std::string msg = std::string(field) + ": expected ";
    if (e.at(field).is_array() && std::string(field) != "presuppositions")
      msg += std::to_string(e.at(field).size()) + " schemata, got " + std::to_string(a.at(field).size()) +
             (e.at(field).size() == a.at(field).size() ? " (contents differ)" : "");
    else
      msg += e.at(field).dump() + ", got " + a.at(field).dump();
    diffs.push_back(msg);
  }
  return diffs;
}

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CaseResult {
  std::string name;
  std::vector<std::string> diffs;
};

CaseResult run_case(const std::filesystem::path& thy, const EngineOptions& opts) {
  CaseResult r{thy.stem().string(), {}};
  try {
    auto golden = thy;
    golden.replace_extension(".json");
    json expected = json::parse(slurp(golden));
    json actual = to_json(analyze(parse_theory(slurp(thy)), opts));
    r.diffs = compare_reports(expected, actual);
  } catch (const std::exception& e) {
    r.diffs.push_back(std::string("error: ") + e.what());
  }
  return r;
}

}  // namespace

CorpusSummary run_corpus(const std::filesystem::path& dir, const EngineOptions& opts, std::ostream& out) {
  std::vector<std::filesystem::path> cases;
  for (const auto& ent : std::filesystem::directory_iterator(dir))
    if (ent.path().extension() == ".thy") cases.push_back(ent.path());
  std::sort(cases.begin(), cases.end());
  CorpusSummary sum;
  if (cases.empty()) {
    out << "warning: no corpus cases in " << dir.string() << "\n";
    return sum;
  }
  std::vector<std::future<CaseResult>> jobs;
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, run_case, c, opts));
  for (auto& j : jobs) {
    CaseResult r = j.get();
    if (r.diffs.empty()) {
      ++sum.passed;
      out << "PASS " << r.name << "\n";
    } else {
      ++sum.failed;
      out << "FAIL " << r.name << "\n";
      for (const auto& d : r.diffs) out << "    " << d << "\n";
    }
  }
  out << sum.passed << " passed, " << sum.failed << " failed\n";
  return sum;
}

}  // namespace strat
