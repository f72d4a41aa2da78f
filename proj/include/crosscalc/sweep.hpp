#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crosscalc/crossings.hpp"
#include "crosscalc/occupation.hpp"
#include "crosscalc/path.hpp"
#include "crosscalc/test_function.hpp"

namespace crosscalc {

/// level_crossings at each level on [s, t]. The parallel version splits the
/// levels across OpenMP threads and returns the same vector.
[[nodiscard]] std::vector<LevelCount> level_counts_serial(const CadlagPath& path, std::span<const double> levels,
                                                          double s, double t);
[[nodiscard]] std::vector<LevelCount> level_counts_parallel(const CadlagPath& path, std::span<const double> levels,
                                                            double s, double t, int jobs = 0);

/// Evaluates any supported identity on [0, t]; `level` is used by tanaka only.
[[nodiscard]] IdentityReport verify_identity(const CadlagPath& path, const TestFunction& g, double t, Identity id,
                                             double level, double tolerance);

struct SweepOutcome {
    std::uint64_t id = 0;
    std::optional<IdentityReport> report;
    std::string error;  // set when the instance threw
};

using SweepInstance = std::function<IdentityReport(std::uint64_t id)>;

/// Runs instances 0..count-1. Exceptions are captured per instance, and the
/// outcomes come back sorted by id whatever the schedule. jobs <= 0 uses the
/// OpenMP default.
[[nodiscard]] std::vector<SweepOutcome> identity_sweep_serial(std::uint64_t count, const SweepInstance& instance);
[[nodiscard]] std::vector<SweepOutcome> identity_sweep_parallel(std::uint64_t count, const SweepInstance& instance,
                                                                int jobs = 0);

/// Seeded random instance path used by the CLI sweep: MixedJumpLinear with
/// 5..40 nodes.
[[nodiscard]] CadlagPath sweep_path(std::uint64_t seed, std::uint64_t id);

struct SweepSummary {
    std::uint64_t instances = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t errors = 0;
    double max_relative_residual = 0.0;
    std::vector<std::uint64_t> failing_ids;
};

[[nodiscard]] SweepSummary summarize(const std::vector<SweepOutcome>& outcomes);

}  // namespace crosscalc
