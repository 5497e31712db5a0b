#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cscl/lavaurs.hpp"
#include "cscl/legality.hpp"
#include "cscl/pullback.hpp"

namespace cscl {

using json = nlohmann::json;

json to_json(const Chord& ch);
Chord chord_from_json(const json& j);

/// Records as {"a","b","type","block"}, in canonical order.
json records_to_json(std::span<const ComajorRecord> records);
std::string records_to_json_text(std::span<const ComajorRecord> records);
std::vector<ComajorRecord> records_from_json(const json& j);
std::vector<ComajorRecord> records_from_json_text(std::string_view text);

/// Header a,b,type,block; canonical order.
std::string records_to_csv(std::span<const ComajorRecord> records);
std::vector<ComajorRecord> records_from_csv(std::string_view text);

json to_json(const LegalityVerdict& v);

json to_json(const Prelamination& p);
std::string prelamination_to_json_text(const Prelamination& p);
Prelamination prelamination_from_json(const json& j);

} // namespace cscl
