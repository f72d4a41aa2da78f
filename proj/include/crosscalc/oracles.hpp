#pragma once

#include <cstdint>

#include "crosscalc/occupation.hpp"
#include "crosscalc/path.hpp"
#include "crosscalc/test_function.hpp"
#include "crosscalc/variation.hpp"

// Brute-force references. None of these reuse the closed-form machinery they
// are compared against: they only sample the path through eval/eval_left.

namespace crosscalc {

/// Uniform time grid with (points - 1) * 2^refine_rounds cells.
struct GridSpec {
    std::int64_t points = 2;
    int refine_rounds = 0;
};

struct GridCrossings {
    std::int64_t up = 0;
    std::int64_t down = 0;
};

/// Greedy alternation count of the D^{y,c}/U^{y,c} test pairs over the grid
/// samples x_u. Grid counts never exceed the exact ones and do not decrease
/// under refinement. Throws LevelAtExtremum if y ± c/2 is a critical level.
[[nodiscard]] GridCrossings grid_crossing_oracle(const CadlagPath& path, double y, double c, double s, double t,
                                                 GridSpec grid);

/// Partition sum Σ g(x at the cell's left/right end) * (increment)_variant.
/// The partition refines every path segment into `partition_points` cells
/// and isolates each jump in a cell of its own.
[[nodiscard]] double riemann_stieltjes_oracle(const CadlagPath& path, const TestFunction& g, StieltjesQuery q,
                                              std::int64_t partition_points);

/// Midpoint rule for ∫ count(z) g(z) dz over the path range, with counts from
/// pointwise level_crossings.
[[nodiscard]] double sampled_level_integral_oracle(const CadlagPath& path, const TestFunction& g, Selector selector,
                                                   std::int64_t z_samples);

/// Σ |x_v - x_u| (and positive/negative parts) over consecutive points of a
/// uniform grid augmented with node times and points just before them. On a
/// piecewise-monotone path this finest partition attains the supremum.
[[nodiscard]] VariationSummary grid_variation_oracle(const CadlagPath& path, double s, double t,
                                                     std::int64_t points);

}  // namespace crosscalc
