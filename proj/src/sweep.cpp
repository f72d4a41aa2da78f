#include "crosscalc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <omp.h>

#include "crosscalc/change_of_variable.hpp"
#include "crosscalc/error.hpp"
#include "crosscalc/generate.hpp"

namespace crosscalc {

std::vector<LevelCount> level_counts_serial(const CadlagPath& path, std::span<const double> levels, double s,
                                            double t) {
    std::vector<LevelCount> out;
    out.reserve(levels.size());
    for (double z : levels) out.push_back(level_crossings(path, z, s, t));
    return out;
}

std::vector<LevelCount> level_counts_parallel(const CadlagPath& path, std::span<const double> levels, double s,
                                              double t, int jobs) {
    // Validate once so a bad window throws here rather than inside a thread.
    (void)pieces(path, s, t);
    std::vector<LevelCount> out(levels.size());
    const auto n = static_cast<std::int64_t>(levels.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = level_crossings(path, levels[static_cast<std::size_t>(k)], s, t);
    }
    return out;
}

IdentityReport verify_identity(const CadlagPath& path, const TestFunction& g, double t, Identity id, double level,
                               double tolerance) {
    switch (id) {
        case Identity::BanInd1:
        case Identity::BanInd1_1:
        case Identity::BanInd1_11:
        case Identity::BanInd1_2: return identity_report(path, g, t, id, tolerance);
        case Identity::Ito: return ito_residual(path, g, t, tolerance);
        case Identity::ItoMeyer: return ito_meyer_residual(path, g, t, CovVariant::C1, tolerance);
        case Identity::TM1: return ito_meyer_residual(path, g, t, CovVariant::AbsolutelyContV0, tolerance);
        case Identity::TM2: return ito_meyer_residual(path, g, t, CovVariant::LipschitzV, tolerance);
        case Identity::Tanaka: return tanaka_residual(path, level, t);
    }
    throw Error(Errc::InvalidSpec, "unknown identity");
}

namespace {

SweepOutcome run_one(std::uint64_t id, const SweepInstance& instance) {
    SweepOutcome out;
    out.id = id;
    try {
        out.report = instance(id);
    } catch (const std::exception& e) {
        out.error = e.what();
    } catch (...) {
        out.error = "unknown exception";
    }
    return out;
}

}  // namespace

std::vector<SweepOutcome> identity_sweep_serial(std::uint64_t count, const SweepInstance& instance) {
    std::vector<SweepOutcome> out;
    out.reserve(count);
    for (std::uint64_t id = 0; id < count; ++id) out.push_back(run_one(id, instance));
    return out;
}

std::vector<SweepOutcome> identity_sweep_parallel(std::uint64_t count, const SweepInstance& instance, int jobs) {
    std::vector<SweepOutcome> out(count);
    const auto n = static_cast<std::int64_t>(count);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = run_one(static_cast<std::uint64_t>(k), instance);
    }
    // Each slot is written by its own id already; the sort keeps the contract explicit.
    std::sort(out.begin(), out.end(), [](const SweepOutcome& a, const SweepOutcome& b) { return a.id < b.id; });
    return out;
}

CadlagPath sweep_path(std::uint64_t seed, std::uint64_t id) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (id + 1)));
    GeneratorSpec spec;
    spec.family = Family::MixedJumpLinear;
    spec.n = 5 + static_cast<std::int64_t>(mix.next() % 36);
    spec.seed = mix.next();
    spec.amplitude = 1.0;
    return generate(spec);
}

SweepSummary summarize(const std::vector<SweepOutcome>& outcomes) {
    SweepSummary s;
    s.instances = outcomes.size();
    for (const SweepOutcome& o : outcomes) {
        if (!o.report) {
            ++s.errors;
            s.failing_ids.push_back(o.id);
            continue;
        }
        for (double r : o.report->residuals) {
            s.max_relative_residual = std::max(s.max_relative_residual, std::fabs(r) / (1.0 + std::fabs(o.report->lhs)));
        }
        if (o.report->pass) {
            ++s.passed;
        } else {
            ++s.failed;
            s.failing_ids.push_back(o.id);
        }
    }
    return s;
}

}  // namespace crosscalc
