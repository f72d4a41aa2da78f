#include "crosscalc/report.hpp"

#include <cstdio>

#include "crosscalc/numeric.hpp"

namespace crosscalc {

std::string json_quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out + "\"";
}

void JsonObject::key(std::string_view k) {
    if (!body_.empty()) body_ += ',';
    body_ += json_quote(k);
    body_ += ':';
}

JsonObject& JsonObject::add(std::string_view k, double value) {
    key(k);
    body_ += format_number(value);
    return *this;
}

JsonObject& JsonObject::add(std::string_view k, std::int64_t value) {
    key(k);
    body_ += std::to_string(value);
    return *this;
}

JsonObject& JsonObject::add(std::string_view k, bool value) {
    key(k);
    body_ += value ? "true" : "false";
    return *this;
}

JsonObject& JsonObject::add(std::string_view k, std::string_view value) {
    key(k);
    body_ += json_quote(value);
    return *this;
}

JsonObject& JsonObject::add(std::string_view k, const std::vector<double>& values) {
    key(k);
    body_ += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) body_ += ',';
        body_ += format_number(values[i]);
    }
    body_ += ']';
    return *this;
}

JsonObject& JsonObject::add(std::string_view k, const ExtendedCount& value) {
    if (value) return add(k, *value);
    return add(k, std::string_view("infinite"));
}

JsonObject& JsonObject::add_raw(std::string_view k, std::string_view json) {
    key(k);
    body_ += json;
    return *this;
}

std::string to_json(const VariationSummary& v) {
    return JsonObject{}
        .add("s", v.window.first)
        .add("t", v.window.second)
        .add("tv", v.tv)
        .add("utv", v.utv)
        .add("dtv", v.dtv)
        .str();
}

std::string to_json(const LevelCount& c) {
    return JsonObject{}
        .add("z", c.z)
        .add("up", c.up)
        .add("down", c.down)
        .add("total", c.total)
        .add("jump_up", c.jump_up)
        .add("jump_down", c.jump_down)
        .str();
}

std::string to_json(const CorridorCount& c) {
    std::string events = "[";
    for (std::size_t i = 0; i < c.events.size(); ++i) {
        if (i) events += ',';
        events += JsonObject{}
                      .add("time", c.events[i].time)
                      .add("kind", c.events[i].kind == EventKind::Tau ? "TAU" : "SIGMA")
                      .str();
    }
    events += ']';
    return JsonObject{}.add("y", c.y).add("c", c.c).add("up", c.up).add("down", c.down).add_raw("events", events).str();
}

std::string to_json(const LevelStatistics& s) {
    return JsonObject{}
        .add("z", s.z)
        .add("card_I", s.card_I)
        .add("card_D", s.card_D)
        .add("indicatrix_n", s.indicatrix_n)
        .add("ell", s.ell)
        .add("lambda", s.lambda)
        .add("r", s.r)
        .add("simple", s.simple)
        .str();
}

std::string to_json(const IdentityReport& r) {
    return JsonObject{}
        .add("identity", to_string(r.identity))
        .add("lhs", r.lhs)
        .add("rhs", r.rhs_forms)
        .add("residuals", r.residuals)
        .add("tolerance", r.tolerance)
        .add("pass", r.pass)
        .str();
}

std::string profile_csv(const CrossingProfile& profile) {
    std::string out = "z_lo,z_hi,up,down,jump_up,jump_down\n";
    for (std::size_t k = 0; k < profile.bands.size(); ++k) {
        const LevelCount& b = profile.bands[k];
        out += format_number(profile.breakpoints[k]) + ',' + format_number(profile.breakpoints[k + 1]) + ',' +
               std::to_string(b.up) + ',' + std::to_string(b.down) + ',' + std::to_string(b.jump_up) + ',' +
               std::to_string(b.jump_down) + '\n';
    }
    return out;
}

}  // namespace crosscalc
