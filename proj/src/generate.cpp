#include "crosscalc/generate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "crosscalc/error.hpp"
#include "crosscalc/numeric.hpp"
#include "crosscalc/variation.hpp"

namespace crosscalc {

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::StepRandom: return "step_random";
        case Family::Zigzag: return "zigzag";
        case Family::Sawtooth: return "sawtooth";
        case Family::MixedJumpLinear: return "mixed_jump_linear";
        case Family::Counterexample: return "counterexample";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "step_random" || s == "step") return Family::StepRandom;
    if (s == "zigzag") return Family::Zigzag;
    if (s == "sawtooth") return Family::Sawtooth;
    if (s == "mixed_jump_linear" || s == "mixed") return Family::MixedJumpLinear;
    if (s == "counterexample") return Family::Counterexample;
    throw Error(Errc::InvalidSpec, "unknown generator family '" + s + "'");
}

namespace {

CadlagPath step_random(std::int64_t n, SplitMix64& rng, double amp) {
    std::vector<PathNode> nodes;
    double v = amp * rng.uniform(-1.0, 1.0);
    nodes.push_back({0.0, v, v, Interp::Constant});
    for (std::int64_t k = 1; k <= n; ++k) {
        const double next = amp * rng.uniform(-1.0, 1.0);
        nodes.push_back({static_cast<double>(k), v, next, Interp::Constant});
        v = next;
    }
    return CadlagPath::build(std::move(nodes));
}

CadlagPath zigzag(std::int64_t n, double amp) {
    std::vector<PathNode> nodes;
    for (std::int64_t k = 0; k <= n; ++k) {
        const double v = k % 2 == 0 ? 0.0 : amp;
        nodes.push_back({static_cast<double>(k), v, v, k < n ? Interp::Linear : Interp::Constant});
    }
    return CadlagPath::build(std::move(nodes));
}

CadlagPath sawtooth(std::int64_t n, double amp) {
    std::vector<PathNode> nodes;
    nodes.push_back({0.0, 0.0, 0.0, Interp::Linear});
    for (std::int64_t k = 1; k <= n; ++k) {
        nodes.push_back({static_cast<double>(k), amp, 0.0, k < n ? Interp::Linear : Interp::Constant});
    }
    return CadlagPath::build(std::move(nodes));
}

CadlagPath mixed(std::int64_t n, SplitMix64& rng, double amp) {
    std::vector<PathNode> nodes;
    double t = 0.0;
    double v = amp * rng.uniform(-1.0, 1.0);
    nodes.push_back({t, v, v, rng.uniform() < 0.6 ? Interp::Linear : Interp::Constant});
    for (std::int64_t k = 1; k < n; ++k) {
        t += rng.uniform(0.2, 1.0);
        const PathNode& prev = nodes.back();
        // A Constant segment pins the left limit to the previous value.
        const double left = prev.interp == Interp::Linear ? amp * rng.uniform(-1.0, 1.0) : prev.right;
        const double right = rng.uniform() < 0.5 ? amp * rng.uniform(-1.0, 1.0) : left;
        const Interp interp = k + 1 < n && rng.uniform() < 0.6 ? Interp::Linear : Interp::Constant;
        nodes.push_back({t, left, right, interp});
    }
    return CadlagPath::build(std::move(nodes));
}

CadlagPath counterexample(std::int64_t n) {
    std::vector<PathNode> nodes;
    nodes.push_back({0.0, 0.0, 0.0, Interp::Constant});
    ExactSum expected;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double two_k = 2.0 * static_cast<double>(k);
        const double height = 1.0 / (two_k * two_k);
        nodes.push_back({1.0 - 1.0 / two_k, 0.0, height, Interp::Constant});
        nodes.push_back({1.0 - 1.0 / (two_k + 1.0), height, 0.0, Interp::Constant});
        expected.add(2.0 * height);
    }
    nodes.push_back({1.0, 0.0, 0.0, Interp::Constant});
    CadlagPath path = CadlagPath::build(std::move(nodes));
    const double tv = variation_summary(path, 0.0, 1.0).tv;
    if (std::fabs(tv - expected.value()) > 1e-12 * (1.0 + expected.value())) {
        throw Error(Errc::InvalidSpec, "counterexample total variation does not match 2 sum 1/(2k)^2");
    }
    return path;
}

}  // namespace

CadlagPath generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw Error(Errc::InvalidSpec, "generator size n must be at least 1");
    if (!(spec.amplitude > 0.0) || !std::isfinite(spec.amplitude)) {
        throw Error(Errc::InvalidSpec, "generator amplitude must be positive and finite");
    }
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
        case Family::StepRandom: return step_random(spec.n, rng, spec.amplitude);
        case Family::Zigzag: return zigzag(spec.n, spec.amplitude);
        case Family::Sawtooth: return sawtooth(spec.n, spec.amplitude);
        case Family::MixedJumpLinear: return mixed(spec.n, rng, spec.amplitude);
        case Family::Counterexample: return counterexample(spec.n);
    }
    throw Error(Errc::InvalidSpec, "unknown generator family");
}

GeneratorSpec parse_generator(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        parts.emplace_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 4) {
        throw Error(Errc::InvalidSpec, "generator spec must be family:n[:seed[:amplitude]]");
    }
    GeneratorSpec spec;
    spec.family = parse_family(parts[0]);
    auto whole = [&](const std::string& s, const char* what) {
        char* end = nullptr;
        const long long v = std::strtoll(s.c_str(), &end, 10);
        if (s.empty() || *end != '\0') throw Error(Errc::InvalidSpec, std::string("bad ") + what + " '" + s + "'");
        return v;
    };
    spec.n = whole(parts[1], "size");
    if (parts.size() > 2) {
        char* end = nullptr;
        spec.seed = std::strtoull(parts[2].c_str(), &end, 10);
        if (parts[2].empty() || *end != '\0') throw Error(Errc::InvalidSpec, "bad seed '" + parts[2] + "'");
    }
    if (parts.size() > 3) {
        char* end = nullptr;
        spec.amplitude = std::strtod(parts[3].c_str(), &end);
        if (parts[3].empty() || *end != '\0') throw Error(Errc::InvalidSpec, "bad amplitude '" + parts[3] + "'");
    }
    return spec;
}

}  // namespace crosscalc
