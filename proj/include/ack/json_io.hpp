#pragma once

// Canonical JSON for CLI output: sorted keys, rationals as "p/q" strings,
// a top-level "schema" tag.

#include "ack/extension.hpp"
#include "ack/fusion.hpp"
#include "ack/modrep.hpp"
#include "ack/series.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ack::io {

using Json = nlohmann::json;

inline constexpr const char* schema_tag = "affine-current-kit/1";

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// Small integers as JSON numbers, larger ones as decimal strings.
Json integer_json(const Integer& z);

/// Adds the schema tag and serializes with two-space indentation and a
/// trailing newline.
std::string emit(Json doc);

Json lie_type_json(const LieType& t);
Json series_json(const CharSeries& s);
Json module_json(const ExtensionData& ext, const ModuleLabel& label);

/// A fusion table keyed by printable labels.
struct FusionTable {
    std::string kind;  // "affine" or "extended"
    std::string type;
    int level = 0;
    std::vector<std::string> labels;
    std::map<std::pair<std::string, std::string>, std::map<std::string, Integer>> products;

    bool operator==(const FusionTable&) const = default;
};

FusionTable sl2_table(int level);
FusionTable ext_sl2_table(const ExtensionData& ext);

Json table_json(const FusionTable& t);
/// Throws ValidationError on malformed documents.
FusionTable table_from_json(const Json& j);

/// "W(i,j)" with the integer label j of the rank-one constructions.
std::string ext_label_name(const ExtensionData& ext, const ModuleLabel& label);

}  // namespace ack::io
