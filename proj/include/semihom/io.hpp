#pragma once

// JSON forms of modules ("semihomology-module/1") and matrices.  Rationals are
// strings "p/q" or "p"; dumps are canonical (sorted keys, fixed indentation)
// so that load followed by dump is byte-identical.

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "semihom/diagmod.hpp"

namespace semihom {

inline constexpr const char* kModuleFormat = "semihomology-module/1";
inline constexpr const char* kMapFormat = "semihomology-map/1";

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json matrix_to_json(const RatMatrix& m);
/// `where` prefixes error messages with the location in the document.
RatMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols, const std::string& where);

nlohmann::json module_to_json(const ModuleData& d);
/// Parses without validating; throws FormatError on malformed documents.
ModuleData module_data_from_json(const nlohmann::json& j);

std::string dump_canonical(const nlohmann::json& j);
std::string dump_module(const DiagramModule& x);
/// Parse then validate; FormatError for syntax, ModuleError for violated identities.
DiagramModule parse_module(std::string_view text);
DiagramModule load_module(const std::string& path);
void save_module(const DiagramModule& x, const std::string& path);

/// {format, source, target, components: {degree: matrix}}; both ends are
/// embedded module documents.
nlohmann::json map_to_json(const ModuleMap& f);
/// Validates both modules and the naturality squares; ModuleError on failure.
ModuleMap map_from_json(const nlohmann::json& j);
ModuleMap load_map(const std::string& path);
void save_map(const ModuleMap& f, const std::string& path);

/// Plain-text matrix dump, one "generator: rows x cols" header per action.
std::string text_dump(const DiagramModule& x);

}  // namespace semihom
