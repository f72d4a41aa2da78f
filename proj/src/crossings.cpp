#include "crosscalc/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crosscalc/error.hpp"

namespace crosscalc {

namespace {

// Downcrossings of [y - c/2, y + c/2] by `sign * x` over the given pieces.
// Hitting times on drift pieces are solved in closed form; only value
// comparisons decide whether a hit exists.
std::int64_t corridor_down(const std::vector<Piece>& ps, double y, double c, double sign,
                           std::vector<CrossingEvent>* events) {
    const double top = sign * y + 0.5 * c;
    const double bot = sign * y - 0.5 * c;
    bool seeking_top = true;
    std::int64_t count = 0;
    auto record = [&](double time, EventKind kind) {
        if (events) events->push_back({time, kind});
    };

    for (std::size_t k = 0; k < ps.size(); ++k) {
        const Piece& p = ps[k];
        if (p.is_jump()) {
            const double a = sign * p.v1;
            if (seeking_top && a >= top) {
                record(p.t0, EventKind::Tau);
                seeking_top = false;
            } else if (!seeking_top && a < bot) {
                record(p.t0, EventKind::Sigma);
                ++count;
                seeking_top = true;
            }
            continue;
        }
        const double v0 = sign * p.v0;
        const double v1 = sign * p.v1;
        // The final drift piece attains its end value at the window end.
        const bool closed = k + 1 == ps.size();
        auto time_at = [&](double v) {
            if (v1 == v0) return p.t0;
            return p.t0 + (v - v0) / (v1 - v0) * (p.t1 - p.t0);
        };
        double cur = v0;
        while (true) {
            if (seeking_top) {
                if (cur >= top) {
                    record(time_at(cur), EventKind::Tau);
                } else if (v1 > top || (closed && v1 >= top)) {
                    cur = top;
                    record(time_at(cur), EventKind::Tau);
                } else {
                    break;
                }
                seeking_top = false;
            } else {
                if (cur < bot) {
                    record(time_at(cur), EventKind::Sigma);
                } else if (v1 < bot) {
                    cur = bot;
                    record(time_at(cur), EventKind::Sigma);
                } else {
                    break;
                }
                ++count;
                seeking_top = true;
            }
        }
    }
    return count;
}

int sgn(double v, double z) { return v > z ? 1 : (v < z ? -1 : 0); }

std::size_t index_of(const std::vector<double>& levels, double v) {
    return static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), v) - levels.begin());
}

}  // namespace

CorridorCount corridor_crossings(const CadlagPath& path, double y, double c, double s, double t) {
    if (!(c > 0.0)) throw Error(Errc::NonpositiveWidth, "corridor width must be positive");
    const auto ps = pieces(path, s, t);
    CorridorCount out;
    out.y = y;
    out.c = c;
    out.down = corridor_down(ps, y, c, 1.0, &out.events);
    out.up = corridor_down(ps, y, c, -1.0, nullptr);
    return out;
}

LevelCount level_crossings(const CadlagPath& path, double z, double s, double t) {
    const auto ps = pieces(path, s, t);
    LevelCount out;
    out.z = z;
    int prev = sgn(path.eval(s), z);
    for (const Piece& p : ps) {
        if (p.is_jump()) {
            if (p.v0 < z && z < p.v1) ++out.jump_up;
            if (p.v1 < z && z < p.v0) ++out.jump_down;
        }
        const int cur = sgn(p.v1, z);
        if (cur == 0) continue;
        if (prev != 0 && cur != prev) (prev > 0 ? out.down : out.up) += 1;
        prev = cur;
    }
    out.total = out.up + out.down;
    return out;
}

LevelStatistics level_statistics(const CadlagPath& path, double z, double t) {
    const auto ps = pieces(path, 0.0, t);
    LevelStatistics out;
    out.z = z;
    bool infinite = false;
    std::int64_t n = path.eval(0.0) == z ? 1 : 0;

    for (std::size_t k = 0; k < ps.size(); ++k) {
        const Piece& p = ps[k];
        if (p.is_jump()) {
            if (p.v1 == z) ++n;
            continue;
        }
        if (p.v0 == z && p.v1 == z) {
            infinite = true;
            continue;
        }
        if (p.v0 < z && z < p.v1) {
            ++n;
            ++out.card_I;
        } else if (p.v1 < z && z < p.v0) {
            ++n;
            ++out.card_D;
        }
        if (p.v1 != z) continue;
        if (k + 1 == ps.size()) {
            ++n;  // x_t = z at the window end
            continue;
        }
        const Piece& next = ps[k + 1];
        if (next.is_jump()) continue;  // left limit only, not attained
        ++n;
        if (p.v0 < p.v1 && next.v0 < next.v1) ++out.card_I;
        if (p.v0 > p.v1 && next.v0 > next.v1) ++out.card_D;
    }

    out.ell = out.card_I - out.card_D;
    out.lambda = out.card_I + out.card_D;
    if (!infinite) {
        out.indicatrix_n = n;
        out.r = n - out.lambda;
    }
    out.simple = is_simple_level(path, z, t);
    return out;
}

bool is_simple_level(const CadlagPath& path, double z, double t) {
    for (const Piece& p : pieces(path, 0.0, t)) {
        if (p.is_jump()) {
            if (p.v0 == z || p.v1 == z) return false;
        } else if (p.v0 == z && p.v1 == z) {
            return false;
        }
    }
    return true;
}

std::optional<LevelCount> CrossingProfile::at(double z) const {
    if (breakpoints.empty() || z < breakpoints.front() || z > breakpoints.back()) {
        LevelCount zero;
        zero.z = z;
        return zero;
    }
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), z);
    if (*it == z) return std::nullopt;
    LevelCount out = bands[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
    out.z = z;
    return out;
}

CrossingProfile crossing_profile(const CadlagPath& path, double s, double t) {
    CrossingProfile prof;
    prof.s = s;
    prof.t = t;
    prof.breakpoints = critical_levels(path, s, t);
    const std::size_t m = prof.breakpoints.size();
    if (m < 2) return prof;

    struct Diff {
        std::vector<std::int64_t> up, down, jump_up, jump_down;
    } diff{std::vector<std::int64_t>(m, 0), std::vector<std::int64_t>(m, 0), std::vector<std::int64_t>(m, 0),
           std::vector<std::int64_t>(m, 0)};
    auto add = [&](std::vector<std::int64_t>& d, double lo, double hi) {
        d[index_of(prof.breakpoints, lo)] += 1;
        d[index_of(prof.breakpoints, hi)] -= 1;
    };

    for (const MonotoneRun& r : monotone_runs(path, s, t)) {
        if (r.direction == Direction::Up) add(diff.up, r.lo, r.hi);
        if (r.direction == Direction::Down) add(diff.down, r.lo, r.hi);
    }
    for (const Piece& p : pieces(path, s, t)) {
        if (!p.is_jump()) continue;
        if (p.v1 > p.v0) {
            add(diff.up, p.v0, p.v1);
            add(diff.jump_up, p.v0, p.v1);
        } else {
            add(diff.down, p.v1, p.v0);
            add(diff.jump_down, p.v1, p.v0);
        }
    }

    prof.bands.resize(m - 1);
    LevelCount run;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        run.up += diff.up[k];
        run.down += diff.down[k];
        run.jump_up += diff.jump_up[k];
        run.jump_down += diff.jump_down[k];
        run.total = run.up + run.down;
        run.z = 0.5 * (prof.breakpoints[k] + prof.breakpoints[k + 1]);
        prof.bands[k] = run;
    }
    return prof;
}

double oscillation_gap(const CadlagPath& path, double z, double s, double t) {
    const auto levels = critical_levels(path, s, t);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) gap = std::min(gap, levels[k + 1] - levels[k]);
    for (double w : levels) {
        if (w != z) gap = std::min(gap, 2.0 * std::fabs(w - z));
    }
    return gap;
}

}  // namespace crosscalc
