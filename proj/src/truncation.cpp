#include "crosscalc/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

#include "crosscalc/crossings.hpp"
#include "crosscalc/error.hpp"
#include "crosscalc/variation.hpp"

namespace crosscalc {

namespace {

// Starting value of the follower, from the first exit of the base out of a
// band of width c.
double initial_value(const CadlagPath& path, double c) {
    const auto nodes = path.nodes();
    const double x0 = nodes.front().right;
    double lo = x0;
    double hi = x0;
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        for (double v : {nodes[k].left, nodes[k].right}) {
            if (v - lo > c) return lo + 0.5 * c;
            if (hi - v > c) return hi - 0.5 * c;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return hi - lo <= 0.5 * c ? x0 : 0.5 * (lo + hi);
}

double value_scale(const CadlagPath& path) {
    double m = 1.0;
    for (const PathNode& n : path.nodes()) m = std::max({m, std::fabs(n.left), std::fabs(n.right)});
    return m;
}

double distance_to(const std::vector<double>& levels, double z) {
    double d = std::numeric_limits<double>::infinity();
    auto it = std::lower_bound(levels.begin(), levels.end(), z);
    if (it != levels.end()) d = std::min(d, std::fabs(*it - z));
    if (it != levels.begin()) d = std::min(d, std::fabs(*std::prev(it) - z));
    return d;
}

}  // namespace

TruncatedPath truncate(const CadlagPath& path, double c) {
    if (!(c > 0.0)) throw Error(Errc::NonpositiveWidth, "truncation width must be positive");
    const double h = 0.5 * c;
    const auto nodes = path.nodes();

    double r = initial_value(path, c);
    std::vector<PathNode> out;
    out.reserve(2 * nodes.size());
    out.push_back({nodes.front().t, r, r, Interp::Constant});

    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const PathNode& a = nodes[i];
        const PathNode& b = nodes[i + 1];
        const double v0 = a.right;
        const double v1 = b.left;
        double r_end = r;
        if (a.interp == Interp::Linear && v1 != v0) {
            const bool rising = v1 > v0;
            // Level of the base at which the follower starts to be dragged.
            const double push = rising ? r + h : r - h;
            const bool reaches = rising ? v1 > push : v1 < push;
            if (reaches) {
                r_end = rising ? v1 - h : v1 + h;
                const double frac = (push - v0) / (v1 - v0);
                const double t_star = a.t + frac * (b.t - a.t);
                if (frac <= 0.0 || t_star <= a.t) {
                    out.back().interp = Interp::Linear;
                } else if (t_star < b.t) {
                    out.push_back({t_star, r, r, Interp::Linear});
                } else {
                    r_end = r;
                }
            }
        }
        const double r_next = b.left != b.right ? std::clamp(r_end, b.right - h, b.right + h) : r_end;
        out.push_back({b.t, r_end, r_next, Interp::Constant});
        r = r_next;
    }

    TruncatedPath tp{path, c, CadlagPath::build(std::move(out))};
    enforce_truncation_contract(check_truncation(path, c, tp.result), c);
    return tp;
}

TruncationCheck check_truncation(const CadlagPath& base, double c, const CadlagPath& candidate, int sample_levels) {
    if (base.horizon() != candidate.horizon() || base.nodes().front().t != candidate.nodes().front().t) {
        throw Error(Errc::ContractViolation, "truncated path lives on a different time domain");
    }
    TruncationCheck chk;

    std::vector<double> times;
    for (const PathNode& n : base.nodes()) times.push_back(n.t);
    for (const PathNode& n : candidate.nodes()) times.push_back(n.t);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    for (double u : times) {
        chk.sup_distance = std::max(chk.sup_distance, std::fabs(base.eval(u) - candidate.eval(u)));
        if (u == times.front()) continue;
        const double bl = base.eval_left(u);
        const double cl = candidate.eval_left(u);
        chk.sup_distance = std::max(chk.sup_distance, std::fabs(bl - cl));
        const double excess = std::fabs(candidate.eval(u) - cl) - std::fabs(base.eval(u) - bl);
        chk.jump_excess = std::max(chk.jump_excess, excess);
    }

    const double T = base.horizon();
    if (!(T > base.nodes().front().t)) return chk;
    chk.tv_base = variation_summary(base, 0.0, T).tv;
    chk.tv_result = variation_summary(candidate, 0.0, T).tv;

    const double h = 0.5 * c;
    const auto base_levels = critical_levels(base, 0.0, T);
    const auto cand_levels = critical_levels(candidate, 0.0, T);
    const double lo = base_levels.front() - h;
    const double span = base_levels.back() - base_levels.front() + c;
    const double eps = 1e-9 * value_scale(base);
    constexpr double kGolden = 0.6180339887498949;
    for (int k = 0; k < sample_levels; ++k) {
        const double frac = std::fmod((k + 0.5) * kGolden, 1.0);
        const double z = lo + span * frac;
        if (distance_to(cand_levels, z) < eps || distance_to(base_levels, z + h) < eps ||
            distance_to(base_levels, z - h) < eps) {
            continue;
        }
        ++chk.levels_checked;
        const CorridorCount corridor = corridor_crossings(base, z, c, 0.0, T);
        const LevelCount level = level_crossings(candidate, z, 0.0, T);
        if (corridor.up != level.up || corridor.down != level.down) ++chk.level_mismatches;
    }
    return chk;
}

void enforce_truncation_contract(const TruncationCheck& check, double c) {
    const double slack = 1e-12;
    if (check.sup_distance > 0.5 * c + slack) {
        throw Error(Errc::ContractViolation, "sup distance " + std::to_string(check.sup_distance) + " exceeds c/2");
    }
    if (check.jump_excess > slack) {
        throw Error(Errc::ContractViolation, "a jump of the truncated path exceeds the base jump");
    }
    if (check.tv_result > check.tv_base + c + 1e-9) {
        throw Error(Errc::ContractViolation, "total variation bound violated");
    }
    if (check.level_mismatches > 0) {
        throw Error(Errc::ContractViolation,
                    std::to_string(check.level_mismatches) + " sampled levels disagree with corridor counts");
    }
}

}  // namespace crosscalc
