#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mcfl/instance.hpp"
#include "mcfl/reductions.hpp"
#include "mcfl/solution.hpp"
#include "mcfl/two_class.hpp"

namespace mcfl {

// File formats use 1-based facility and client indices; in memory they are
// 0-based. Costs are integers or the string "inf"; rationals are strings
// "p/q" (or "p"). Parsing failures throw InputError.

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

LotSizingInstance lot_sizing_from_json(const nlohmann::json& j);
nlohmann::json lot_sizing_to_json(const LotSizingInstance& ls);

Solution solution_from_json(const nlohmann::json& j);
nlohmann::json solution_to_json(const Solution& sol);

ClientPartition partition_from_json(const nlohmann::json& j);
nlohmann::json partition_to_json(const ClientPartition& p);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& inst);

// Stable 64-bit FNV-1a digest of the canonical instance JSON, as 16 hex digits.
std::string instance_digest(const Instance& inst);

}  // namespace mcfl
