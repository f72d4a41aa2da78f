#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crosscalc/crossings.hpp"
#include "crosscalc/occupation.hpp"
#include "crosscalc/variation.hpp"

namespace crosscalc {

/// Minimal ordered JSON object writer. Keys keep insertion order and numbers
/// use format_number, so identical inputs give byte-identical text.
class JsonObject {
public:
    JsonObject& add(std::string_view key, double value);
    JsonObject& add(std::string_view key, std::int64_t value);
    JsonObject& add(std::string_view key, int value) { return add(key, static_cast<std::int64_t>(value)); }
    JsonObject& add(std::string_view key, bool value);
    JsonObject& add(std::string_view key, std::string_view value);
    JsonObject& add(std::string_view key, const char* value) { return add(key, std::string_view(value)); }
    JsonObject& add(std::string_view key, const std::vector<double>& values);
    JsonObject& add(std::string_view key, const ExtendedCount& value);
    /// Inserts pre-rendered JSON (object or array) verbatim.
    JsonObject& add_raw(std::string_view key, std::string_view json);
    [[nodiscard]] std::string str() const { return "{" + body_ + "}"; }

private:
    void key(std::string_view k);
    std::string body_;
};

[[nodiscard]] std::string json_quote(std::string_view s);

[[nodiscard]] std::string to_json(const VariationSummary& v);
[[nodiscard]] std::string to_json(const LevelCount& c);
[[nodiscard]] std::string to_json(const CorridorCount& c);
[[nodiscard]] std::string to_json(const LevelStatistics& s);
[[nodiscard]] std::string to_json(const IdentityReport& r);

/// Rows `z_lo,z_hi,up,down,jump_up,jump_down`, one per band.
[[nodiscard]] std::string profile_csv(const CrossingProfile& profile);

}  // namespace crosscalc
