#ifndef EFFLAB_JSON_IO_HPP
#define EFFLAB_JSON_IO_HPP

#include <json.hpp>

#include "efflab/blocks.hpp"
#include "efflab/pure.hpp"
#include "efflab/effect_table.hpp"

namespace efflab {

// Schema tags carried in the "schema" field of every emitted document.
inline constexpr const char* kEffectTableSchema = "effect-table/1";
inline constexpr const char* kSelfAdjointSchema = "self-adjoint/1";
inline constexpr const char* kChannelSchema = "channel-map/1";
inline constexpr const char* kLawReportSchema = "law-report/1";
inline constexpr const char* kManifestSchema = "run-manifest/1";

nlohmann::json to_json(const EffectTable& t);
EffectTable effect_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SelfAdjoint& a);
SelfAdjoint self_adjoint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ChannelMap& f);
ChannelMap channel_from_json(const nlohmann::json& j);

// Same wire shape as a channel with "pure": true; parsing re-validates the
// single-conjugation structure.
nlohmann::json to_json(const PureMap& f);
PureMap pure_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LawReport& r);

// Parses text, translating json errors into ParseError with line/column.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json load_json_file(const std::string& path);

}  // namespace efflab

#endif  // EFFLAB_JSON_IO_HPP
