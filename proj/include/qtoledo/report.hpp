#pragma once

// JSON and plain-text renderings of the computed reports.

#include "qtoledo/lifting.hpp"
#include "qtoledo/toledo.hpp"

#include <json.hpp>

#include <string>

namespace qtoledo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Vec &v);
Json to_json(const PullbackReport &r);
/// {check, input, verdict, violations[]}.
Json to_json(const std::string &check, const MaskVerdict &v);
Json to_json(const HorizontalityReport &r, const Vec &v0, const Vec &w);
Json to_json(const LinearityTable &t);
Json to_json(const PeriodTriple &t);

std::string render_text(const PullbackReport &r);
std::string render_text(const LinearityTable &t);
std::string render_text(const PeriodTriple &t);

/// Parses "z1, z2, z3" (optionally in parentheses) into exact components.
Vec parse_vector(const std::string &text);

} // namespace qtoledo
