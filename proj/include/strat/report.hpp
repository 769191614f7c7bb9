#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "strat/pragmatics.hpp"

namespace strat {

std::string render_human(const AnalysisReport& rep);
nlohmann::json to_json(const AnalysisReport& rep);

// Order-insensitive form of a machine report: schemata as sorted row lists,
// schema lists sorted, presuppositions sorted. Idempotent.
nlohmann::json normalize(const nlohmann::json& report);

// Empty when equal after normalization.
std::vector<std::string> compare_reports(const nlohmann::json& expected, const nlohmann::json& actual);

struct CorpusSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

// Each case is <name>.thy with a golden <name>.json alongside it.
CorpusSummary run_corpus(const std::filesystem::path& dir, const EngineOptions& opts, std::ostream& out);

}  // namespace strat
