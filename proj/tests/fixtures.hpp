#pragma once

#include <cstdint>
#include <vector>

#include "crosscalc/generate.hpp"
#include "crosscalc/path.hpp"
#include "crosscalc/test_function.hpp"

namespace fixtures {

using crosscalc::CadlagPath;
using crosscalc::Interp;
using crosscalc::PathNode;

inline CadlagPath ramp() { return CadlagPath::build({{0, 0, 0, Interp::Linear}, {1, 1, 1, Interp::Constant}}); }

/// 0 on [0, at), 1 from `at` on, horizon 1.
inline CadlagPath step(double at = 0.5, double from = 0.0, double to = 1.0) {
    return CadlagPath::build({{0, from, from, Interp::Constant}, {at, from, to, Interp::Constant},
                              {1, to, to, Interp::Constant}});
}

/// Linear through the listed values at t = 0, 1, 2, ...
inline CadlagPath linear_through(const std::vector<double>& values) {
    std::vector<PathNode> nodes;
    for (std::size_t k = 0; k < values.size(); ++k) {
        nodes.push_back({static_cast<double>(k), values[k], values[k],
                         k + 1 < values.size() ? Interp::Linear : Interp::Constant});
    }
    return CadlagPath::build(std::move(nodes));
}

inline CadlagPath zigzag3() { return linear_through({0, 1, 0, 1}); }

inline CadlagPath random_path(std::uint64_t seed, std::int64_t max_nodes = 40) {
    crosscalc::SplitMix64 mix(seed * 0x9e3779b97f4a7c15ULL + 17);
    crosscalc::GeneratorSpec spec;
    spec.family = crosscalc::Family::MixedJumpLinear;
    spec.n = 2 + static_cast<std::int64_t>(mix.next() % static_cast<std::uint64_t>(max_nodes - 1));
    spec.seed = mix.next();
    return crosscalc::generate(spec);
}

inline std::vector<crosscalc::TestFunction> bounded_functions() {
    return {crosscalc::polynomial({1}),    crosscalc::polynomial({0, 1}), crosscalc::polynomial({0, 0, 1}),
            crosscalc::polynomial({0, 0, 0, 1}), crosscalc::sign_function(),   crosscalc::step_function(0.1)};
}

}  // namespace fixtures
