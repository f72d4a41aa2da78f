#include "crosscalc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "crosscalc/crossings.hpp"
#include "crosscalc/error.hpp"

namespace crosscalc {

namespace {

std::int64_t greedy_down(const std::vector<double>& xs, double y, double c, double sign) {
    const double top = sign * y + 0.5 * c;
    const double bot = sign * y - 0.5 * c;
    bool seeking_top = true;
    std::int64_t count = 0;
    for (double raw : xs) {
        const double x = sign * raw;
        if (seeking_top && x >= top) {
            seeking_top = false;
        } else if (!seeking_top && x < bot) {
            ++count;
            seeking_top = true;
        }
    }
    return count;
}

struct Sample {
    double t;
    double x;
};

}  // namespace

GridCrossings grid_crossing_oracle(const CadlagPath& path, double y, double c, double s, double t, GridSpec grid) {
    if (!(c > 0.0)) throw Error(Errc::NonpositiveWidth, "corridor width must be positive");
    if (grid.points < 2 || grid.refine_rounds < 0 || grid.refine_rounds > 40) {
        throw Error(Errc::InvalidSpec, "grid needs at least 2 points and 0..40 refinement rounds");
    }
    const auto levels = critical_levels(path, s, t);
    for (double edge : {y + 0.5 * c, y - 0.5 * c}) {
        if (std::binary_search(levels.begin(), levels.end(), edge)) {
            throw Error(Errc::LevelAtExtremum, "corridor edge " + std::to_string(edge) + " is a critical level");
        }
    }
    const std::int64_t cells = (grid.points - 1) << grid.refine_rounds;
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(cells + 1));
    for (std::int64_t k = 0; k <= cells; ++k) {
        const double u = k == cells ? t : s + (t - s) * (static_cast<double>(k) / static_cast<double>(cells));
        xs.push_back(path.eval(u));
    }
    return {greedy_down(xs, y, c, -1.0), greedy_down(xs, y, c, 1.0)};
}

double riemann_stieltjes_oracle(const CadlagPath& path, const TestFunction& g, StieltjesQuery q,
                                std::int64_t partition_points) {
    const double T = path.horizon();
    const double t0 = path.nodes().front().t;
    std::vector<double> times;
    for (std::int64_t k = 0; k <= partition_points; ++k) {
        times.push_back(t0 + (T - t0) * (static_cast<double>(k) / static_cast<double>(std::max<std::int64_t>(partition_points, 1))));
    }
    for (const PathNode& n : path.nodes()) times.push_back(n.t);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    // Each jump gets a zero-length cell from x_{u-} to x_u.
    std::vector<Sample> samples;
    std::vector<bool> is_jump_cell;
    for (double u : times) {
        const double x = path.eval(u);
        if (u > t0) {
            const double xl = path.eval_left(u);
            if (xl != x) {
                samples.push_back({u, xl});
                is_jump_cell.push_back(false);
                samples.push_back({u, x});
                is_jump_cell.push_back(true);
                continue;
            }
        }
        samples.push_back({u, x});
        is_jump_cell.push_back(false);
    }

    double acc = 0.0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const double inc = (q.base == Base::Continuous && is_jump_cell[k]) ? 0.0 : samples[k].x - samples[k - 1].x;
        double mass = 0.0;
        switch (q.variant) {
            case Variant::Signed: mass = inc; break;
            case Variant::Plus: mass = std::max(inc, 0.0); break;
            case Variant::Minus: mass = std::max(-inc, 0.0); break;
            case Variant::Abs: mass = std::fabs(inc); break;
        }
        if (mass == 0.0) continue;
        acc += g(q.side == Side::Left ? samples[k - 1].x : samples[k].x) * mass;
    }
    return acc;
}

double sampled_level_integral_oracle(const CadlagPath& path, const TestFunction& g, Selector selector,
                                     std::int64_t z_samples) {
    if (z_samples < 10) throw Error(Errc::InvalidSpec, "need at least 10 level samples");
    double lo = path.nodes().front().right;
    double hi = lo;
    for (const PathNode& n : path.nodes()) {
        lo = std::min({lo, n.left, n.right});
        hi = std::max({hi, n.left, n.right});
    }
    const double T = path.horizon();
    if (hi == lo || !(T > path.nodes().front().t)) return 0.0;
    const double h = (hi - lo) / static_cast<double>(z_samples);
    double acc = 0.0;
    for (std::int64_t k = 0; k < z_samples; ++k) {
        const double z = lo + (static_cast<double>(k) + 0.5) * h;
        const LevelCount lc = level_crossings(path, z, 0.0, T);
        std::int64_t n = 0;
        switch (selector) {
            case Selector::Up: n = lc.up; break;
            case Selector::Down: n = lc.down; break;
            case Selector::UpMinusDown: n = lc.up - lc.down; break;
            case Selector::Total: n = lc.total; break;
        }
        acc += static_cast<double>(n) * g(z) * h;
    }
    return acc;
}

VariationSummary grid_variation_oracle(const CadlagPath& path, double s, double t, std::int64_t points) {
    if (!(s >= 0.0 && s < t && t <= path.horizon())) throw Error(Errc::OutOfDomain, "bad variation window");
    std::vector<double> times;
    for (std::int64_t k = 0; k <= points; ++k) {
        times.push_back(k == points ? t : s + (t - s) * (static_cast<double>(k) / static_cast<double>(points)));
    }
    const auto nodes = path.nodes();
    for (std::size_t j = 1; j < nodes.size(); ++j) {
        const double u = nodes[j].t;
        if (u <= s || u > t) continue;
        times.push_back(u);
        const double before = u - 1e-11 * (u - nodes[j - 1].t);
        if (before > s) times.push_back(before);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    VariationSummary out;
    out.window = {s, t};
    double prev = path.eval(times.front());
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double x = path.eval(times[k]);
        const double d = x - prev;
        if (d > 0.0) out.utv += d;
        if (d < 0.0) out.dtv -= d;
        prev = x;
    }
    out.tv = out.utv + out.dtv;
    return out;
}

}  // namespace crosscalc
