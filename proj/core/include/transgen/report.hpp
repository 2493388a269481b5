#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "transgen/engine.hpp"
#include "transgen/sweeps.hpp"

namespace transgen {

inline constexpr const char* kSchemaTag = "transgen/1";

enum class ReportFormat { Text, Json, Csv };
ReportFormat parse_format(const std::string& name);  // throws on unknown format

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const std::string& table, const std::vector<DegreeRecord>& rows);
// Fixed column order: d_expr,f,bound,paper_bound,delta
std::string table_to_csv(const std::vector<DegreeRecord>& rows);
std::string table_to_text(const std::string& table, const std::vector<DegreeRecord>& rows);

nlohmann::json sweep_to_json(const SweepReport& rep);
std::string sweeps_to_jsonl(const std::vector<SweepReport>& reps);
std::string sweeps_to_text(const std::vector<SweepReport>& reps);

std::string certificate_to_text(const Certificate& cert);

}  // namespace transgen
