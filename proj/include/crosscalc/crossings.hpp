#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crosscalc/path.hpp"

namespace crosscalc {

/// Count in N_0 ∪ {+∞}; nullopt stands for +∞.
using ExtendedCount = std::optional<std::int64_t>;

enum class EventKind { Tau, Sigma };

struct CrossingEvent {
    double time = 0.0;
    EventKind kind = EventKind::Tau;
};

/// Crossings of the corridor [y - c/2, y + c/2] during [s, t].
///
/// `events` lists the hitting times of the downcrossing recursion:
/// τ_0, σ_1, τ_1, σ_2, ... (τ reaches x >= y + c/2, σ falls to x < y - c/2).
struct CorridorCount {
    double y = 0.0;
    double c = 0.0;
    std::int64_t up = 0;
    std::int64_t down = 0;
    std::vector<CrossingEvent> events;
};

/// Level crossings at z, including the ones achieved by a single jump.
struct LevelCount {
    double z = 0.0;
    std::int64_t up = 0;
    std::int64_t down = 0;
    std::int64_t total = 0;
    std::int64_t jump_up = 0;
    std::int64_t jump_down = 0;
};

/// Per-level statistics on [0, t]: card_I / card_D count the points of
/// continuous strict increase / decrease through z, indicatrix_n the level
/// set {u in [0, t] : x_u = z}, r = n - card_I - card_D.
struct LevelStatistics {
    double z = 0.0;
    std::int64_t card_I = 0;
    std::int64_t card_D = 0;
    ExtendedCount indicatrix_n;
    std::int64_t ell = 0;
    std::int64_t lambda = 0;
    ExtendedCount r;
    bool simple = false;
};

/// Piecewise-constant map z -> LevelCount. `bands[k]` holds the counts on
/// the open interval (breakpoints[k], breakpoints[k+1]).
struct CrossingProfile {
    std::vector<double> breakpoints;
    std::vector<LevelCount> bands;
    double s = 0.0;
    double t = 0.0;

    /// Counts at a level off the breakpoints (zero outside the range);
    /// nullopt when z is itself a breakpoint.
    [[nodiscard]] std::optional<LevelCount> at(double z) const;
};

/// σ/τ recursion for downcrossings; upcrossings via the reflection
/// U^{y,c}(x) = D^{-y,c}(-x). Throws NonpositiveWidth, OutOfDomain.
[[nodiscard]] CorridorCount corridor_crossings(const CadlagPath& path, double y, double c, double s, double t);

/// Level crossings as the literal c -> 0+ limit of corridor crossings. A
/// local extremum touching z contributes nothing; a monotone passage through z
/// contributes one.
[[nodiscard]] LevelCount level_crossings(const CadlagPath& path, double z, double s, double t);

/// Statistics over [0, t]. A point at the window end t has no right
/// neighbourhood inside the window and is never an increase/decrease point.
[[nodiscard]] LevelStatistics level_statistics(const CadlagPath& path, double z, double t);

/// True iff the level set in (0, t] is finite and no jump in (0, t] starts or
/// ends at z.
[[nodiscard]] bool is_simple_level(const CadlagPath& path, double z, double t);

/// Band-wise counts on [s, t], built from monotone runs and jumps.
[[nodiscard]] CrossingProfile crossing_profile(const CadlagPath& path, double s, double t);

/// Width below which corridor counts centred at z are guaranteed to equal the
/// level counts at z: the smaller of the spacing between consecutive critical
/// levels and twice the distance from z to the nearest other critical level.
[[nodiscard]] double oscillation_gap(const CadlagPath& path, double z, double s, double t);

}  // namespace crosscalc
