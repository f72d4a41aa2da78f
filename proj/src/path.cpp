#include "crosscalc/path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crosscalc/error.hpp"

namespace crosscalc {

namespace {

std::string at_node(std::size_t i) { return " (node " + std::to_string(i) + ")"; }

void require_window(const CadlagPath& path, double s, double t) {
    if (!(s >= 0.0 && s < t && t <= path.horizon())) {
        throw Error(Errc::OutOfDomain, "window [" + std::to_string(s) + ", " + std::to_string(t) +
                                           "] outside [0, " + std::to_string(path.horizon()) + "]");
    }
}

}  // namespace

CadlagPath CadlagPath::build(std::vector<PathNode> nodes) {
    if (nodes.empty()) throw Error(Errc::EmptyPath, "a path needs at least one node");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const PathNode& n = nodes[i];
        if (!std::isfinite(n.t) || !std::isfinite(n.left) || !std::isfinite(n.right)) {
            throw Error(Errc::NonFiniteValue, "non-finite time or value" + at_node(i));
        }
        if (i == 0) {
            if (n.t != 0.0) throw Error(Errc::NonMonotoneTime, "the first node must sit at t = 0");
            if (n.left != n.right) throw Error(Errc::JumpAtOrigin, "first node carries a jump");
            continue;
        }
        const PathNode& prev = nodes[i - 1];
        if (!(n.t > prev.t)) throw Error(Errc::NonMonotoneTime, "times must strictly increase" + at_node(i));
        if (prev.interp == Interp::Constant && n.left != prev.right) {
            throw Error(Errc::InconsistentSegment,
                        "left limit differs from the preceding constant value" + at_node(i));
        }
    }
    return CadlagPath(std::move(nodes));
}

std::size_t CadlagPath::segment_index(double t) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t,
                               [](double v, const PathNode& n) { return v < n.t; });
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

double CadlagPath::eval(double t) const {
    if (!(t >= nodes_.front().t && t <= horizon())) {
        throw Error(Errc::OutOfDomain, "eval at t=" + std::to_string(t));
    }
    const std::size_t i = segment_index(t);
    const PathNode& a = nodes_[i];
    if (i + 1 == nodes_.size() || a.interp == Interp::Constant || t == a.t) return a.right;
    const PathNode& b = nodes_[i + 1];
    return a.right + (b.left - a.right) * ((t - a.t) / (b.t - a.t));
}

double CadlagPath::eval_left(double t) const {
    if (!(t > nodes_.front().t && t <= horizon())) {
        throw Error(Errc::OutOfDomain, "eval_left at t=" + std::to_string(t));
    }
    const std::size_t i = segment_index(t);
    if (nodes_[i].t == t) return nodes_[i].left;
    return eval(t);
}

CadlagPath CadlagPath::negated() const {
    std::vector<PathNode> out(nodes_);
    for (PathNode& n : out) {
        n.left = -n.left;
        n.right = -n.right;
    }
    return CadlagPath(std::move(out));
}

std::vector<Piece> pieces(const CadlagPath& path, double s, double t) {
    require_window(path, s, t);
    const auto nodes = path.nodes();
    std::vector<Piece> out;
    out.reserve(2 * nodes.size());

    auto it = std::upper_bound(nodes.begin(), nodes.end(), s,
                               [](double v, const PathNode& n) { return v < n.t; });
    std::size_t i = static_cast<std::size_t>(it - nodes.begin()) - 1;
    double cur_t = s;
    double cur_v = path.eval(s);
    while (true) {
        const PathNode& a = nodes[i];
        const PathNode& b = nodes[i + 1];
        if (t < b.t) {
            const double end_v = a.interp == Interp::Constant ? a.right : path.eval(t);
            out.push_back({Piece::Kind::Drift, cur_t, t, cur_v, end_v});
            break;
        }
        out.push_back({Piece::Kind::Drift, cur_t, b.t, cur_v, b.left});
        if (b.left != b.right) out.push_back({Piece::Kind::Jump, b.t, b.t, b.left, b.right});
        if (b.t == t) break;
        ++i;
        cur_t = b.t;
        cur_v = b.right;
    }
    return out;
}

CadlagPath continuous_part(const CadlagPath& path) {
    const auto nodes = path.nodes();
    std::vector<PathNode> out;
    out.reserve(nodes.size());
    double value = nodes.front().right;
    out.push_back({nodes.front().t, value, value, nodes.front().interp});
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        const PathNode& prev = nodes[k - 1];
        // Accumulate drift increments only; a constant segment adds nothing.
        if (prev.interp == Interp::Linear) value += nodes[k].left - prev.right;
        out.push_back({nodes[k].t, value, value, nodes[k].interp});
    }
    return CadlagPath::build(std::move(out));
}

std::vector<MonotoneRun> monotone_runs(const CadlagPath& path, double s, double t) {
    std::vector<MonotoneRun> runs;
    bool open = false;
    MonotoneRun cur;
    auto close = [&] {
        if (open) runs.push_back(cur);
        open = false;
    };
    const std::vector<Piece> ps = pieces(path, s, t);
    for (const Piece& p : ps) {
        if (p.is_jump()) {
            close();
            continue;
        }
        const Direction dir = p.v1 > p.v0 ? Direction::Up : (p.v1 < p.v0 ? Direction::Down : Direction::Flat);
        const double lo = std::min(p.v0, p.v1);
        const double hi = std::max(p.v0, p.v1);
        const bool extends = open && (dir == cur.direction || (dir == Direction::Flat && cur.direction != Direction::Flat));
        if (extends) {
            cur.end = p.t1;
            cur.lo = std::min(cur.lo, lo);
            cur.hi = std::max(cur.hi, hi);
            continue;
        }
        close();
        cur = MonotoneRun{p.t0, p.t1, dir, lo, hi};
        open = true;
    }
    close();
    // A jump at t leaves x_t attained only at t itself.
    if (!ps.empty() && ps.back().is_jump()) {
        runs.push_back({t, t, Direction::Flat, ps.back().v1, ps.back().v1});
    }
    return runs;
}

std::vector<double> critical_levels(const CadlagPath& path, double s, double t) {
    std::vector<double> levels;
    levels.push_back(path.eval(s));
    for (const MonotoneRun& r : monotone_runs(path, s, t)) {
        levels.push_back(r.lo);
        levels.push_back(r.hi);
    }
    for (const Piece& p : pieces(path, s, t)) {
        if (!p.is_jump()) continue;
        levels.push_back(p.v0);
        levels.push_back(p.v1);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

}  // namespace crosscalc
