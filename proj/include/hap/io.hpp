#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hap/housing.hpp"
#include "hap/intersecting.hpp"
#include "hap/properties.hpp"
#include "hap/set_family.hpp"
#include "hap/setcore.hpp"
#include "hap/setpairs.hpp"
#include "hap/structure.hpp"

// Text and JSON formats. Sets are ascending integer arrays, families one set
// per line (or a JSON array of arrays), big integers decimal strings. Buyers
// appear 1-based in every external format.

namespace hap::io {

using json = nlohmann::ordered_json;

/// "m u" then m rows of house indices, or {"m":…, "u":…, "rows":[[…],…]}.
/// Errors name the offending line.
PreferenceProfile parse_profile(std::string_view text);
std::string format_profile(const PreferenceProfile& profile);
json to_json(const PreferenceProfile& profile);
PreferenceProfile profile_from_json(const json& j);

/// One set per line ("1 2 3", blank lines and '#' comments skipped) or a JSON
/// array of arrays. The universe defaults to the largest element.
SetFamily parse_family(std::string_view text, std::optional<int> universe = std::nullopt);
std::string format_family(const SetFamily& family);
json to_json(const SetFamily& family);
SetFamily family_from_json(const json& j, std::optional<int> universe = std::nullopt);

json to_json(const FiniteSet& s);
FiniteSet set_from_json(const json& j);

/// {"kind": "...", "pairs": [{"A": […], "B": […]}, …]}; a bare pair array means kind bollobas.
json to_json(const SetPairSystem& system);
SetPairSystem setpairs_from_json(const json& j);
SetPairSystem parse_setpairs(std::string_view text);

json to_json(const Matching& matching);
json to_json(const BoundsReport& report);
json to_json(const PropertyVerdict& verdict);
json to_json(const EllemOutcome& outcome);
json to_json(const RowChain& chain);
json to_json(const FOracleResult& result);
json to_json(const FamilyOracleResult& result);
json to_json(const DrFreeResult& result);
json to_json(const JOracleResult& result);
json to_json(const ConjectureSearchResult& result);
json to_json(const FiScan& scan);

BigCount big_from_json(const json& j);

std::string read_file(const std::string& path);

}  // namespace hap::io
