#include "crosscalc/path_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "crosscalc/error.hpp"
#include "crosscalc/numeric.hpp"

namespace crosscalc {

namespace {

constexpr std::string_view kHeader = "t,left,right,interp";

char interp_code(Interp i) { return i == Interp::Linear ? 'L' : 'C'; }

Interp parse_interp(std::string_view s, std::size_t line) {
    if (s == "L") return Interp::Linear;
    if (s == "C") return Interp::Constant;
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": interp must be C or L");
}

double parse_number(std::string_view s, std::size_t line) {
    const std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (buf.empty() || *end != '\0') {
        throw Error(Errc::ParseError, "line " + std::to_string(line) + ": bad number '" + buf + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

bool has_json_extension(const std::string& name) {
    return name.size() >= 5 && name.compare(name.size() - 5, 5, ".json") == 0;
}

}  // namespace

std::string write_path_csv(const CadlagPath& path) {
    std::string out(kHeader);
    out += '\n';
    for (const PathNode& n : path.nodes()) {
        out += format_number(n.t) + ',' + format_number(n.left) + ',' + format_number(n.right) + ',' +
               interp_code(n.interp) + '\n';
    }
    return out;
}

CadlagPath read_path_csv(std::string_view text) {
    std::vector<PathNode> nodes;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kHeader) throw Error(Errc::ParseError, "expected header '" + std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 4) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 4 fields");
        }
        nodes.push_back({parse_number(fields[0], line_no), parse_number(fields[1], line_no),
                         parse_number(fields[2], line_no), parse_interp(fields[3], line_no)});
    }
    if (!header_seen) throw Error(Errc::ParseError, "empty path file");
    return CadlagPath::build(std::move(nodes));
}

std::string write_path_json(const CadlagPath& path) {
    std::string out = "{\"nodes\":[";
    bool first = true;
    for (const PathNode& n : path.nodes()) {
        if (!first) out += ',';
        first = false;
        out += "{\"t\":" + format_number(n.t) + ",\"left\":" + format_number(n.left) +
               ",\"right\":" + format_number(n.right) + ",\"interp\":\"" + interp_code(n.interp) + "\"}";
    }
    out += "]}\n";
    return out;
}

CadlagPath read_path_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
        throw Error(Errc::ParseError, "expected an object with a \"nodes\" array");
    }
    std::vector<PathNode> nodes;
    std::size_t k = 0;
    for (const auto& item : doc["nodes"]) {
        auto number = [&](const char* key) {
            if (!item.is_object() || !item.contains(key) || !item[key].is_number()) {
                throw Error(Errc::ParseError, "node " + std::to_string(k) + ": missing number '" + key + "'");
            }
            return item[key].get<double>();
        };
        PathNode n{number("t"), number("left"), number("right"), Interp::Constant};
        if (!item.contains("interp") || !item["interp"].is_string()) {
            throw Error(Errc::ParseError, "node " + std::to_string(k) + ": missing interp");
        }
        n.interp = parse_interp(item["interp"].get<std::string>(), k);
        nodes.push_back(n);
        ++k;
    }
    return CadlagPath::build(std::move(nodes));
}

CadlagPath load_path(const std::string& filename) {
    std::ifstream in(filename, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + filename + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return has_json_extension(filename) ? read_path_json(buf.str()) : read_path_csv(buf.str());
}

void save_path(const CadlagPath& path, const std::string& filename) {
    std::ofstream out(filename, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot write '" + filename + "'");
    out << (has_json_extension(filename) ? write_path_json(path) : write_path_csv(path));
    if (!out) throw Error(Errc::ParseError, "write to '" + filename + "' failed");
}

}  // namespace crosscalc
