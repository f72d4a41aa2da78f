#pragma once

#include <string>
#include <string_view>

#include "crosscalc/path.hpp"

namespace crosscalc {

/// CSV with header `t,left,right,interp`, interp in {C, L}. Numbers are
/// written with 17 significant digits, so write/read round-trips exactly.
[[nodiscard]] std::string write_path_csv(const CadlagPath& path);
[[nodiscard]] CadlagPath read_path_csv(std::string_view text);

/// {"nodes":[{"t":..,"left":..,"right":..,"interp":"C"|"L"}, ...]}
[[nodiscard]] std::string write_path_json(const CadlagPath& path);
[[nodiscard]] CadlagPath read_path_json(std::string_view text);

/// Reads a file; `.json` selects JSON, anything else CSV. Throws ParseError
/// on IO failure or malformed content.
[[nodiscard]] CadlagPath load_path(const std::string& filename);
/// Writes in the format picked by the extension, as load_path.
void save_path(const CadlagPath& path, const std::string& filename);

}  // namespace crosscalc
