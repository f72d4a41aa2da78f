#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace crosscalc {

/// Shape of a path on [t_i, t_{i+1}).
enum class Interp { Constant, Linear };

/// One node of a finitely represented càdlàg path.
///
/// `left` is the left limit x_{t-}, `right` is the value x_t. On
/// [t, next.t) the path is constant at `right` (Constant) or interpolates
/// linearly from `right` to the next node's `left` (Linear).
struct PathNode {
    double t = 0.0;
    double left = 0.0;
    double right = 0.0;
    Interp interp = Interp::Constant;

    [[nodiscard]] double jump() const noexcept { return right - left; }

    friend bool operator==(const PathNode&, const PathNode&) = default;
};

/// Immutable, validated càdlàg path built from piecewise constant/linear
/// segments. Every such path is piecewise monotone.
class CadlagPath {
public:
    /// Validates and takes ownership of `nodes`. Throws crosscalc::Error with
    /// EmptyPath, NonMonotoneTime, JumpAtOrigin, NonFiniteValue or
    /// InconsistentSegment (a Constant segment whose successor's left limit
    /// differs from the segment value).
    static CadlagPath build(std::vector<PathNode> nodes);

    [[nodiscard]] std::span<const PathNode> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] double horizon() const noexcept { return nodes_.back().t; }

    /// x_t, right-continuous. Requires 0 <= t <= horizon.
    [[nodiscard]] double eval(double t) const;
    /// x_{t-}. Requires 0 < t <= horizon.
    [[nodiscard]] double eval_left(double t) const;

    /// The reflected path t -> -x_t.
    [[nodiscard]] CadlagPath negated() const;

    friend bool operator==(const CadlagPath&, const CadlagPath&) = default;

private:
    explicit CadlagPath(std::vector<PathNode> nodes) : nodes_(std::move(nodes)) {}

    // Index i of the segment [t_i, t_{i+1}) holding t (last node for t == horizon).
    [[nodiscard]] std::size_t segment_index(double t) const;

    std::vector<PathNode> nodes_;
};

/// Monotone building block of a path restricted to a window [s, t].
///
/// A Drift piece covers [t0, t1) continuously, starting at the attained value
/// v0 and tending to v1 (a left limit unless the piece ends at the window end,
/// where v1 = x_t is attained). A Jump piece sits at t0 == t1 and goes from
/// x_{t0-} = v0 to x_{t0} = v1 instantaneously.
struct Piece {
    enum class Kind { Drift, Jump };
    Kind kind = Kind::Drift;
    double t0 = 0.0;
    double t1 = 0.0;
    double v0 = 0.0;
    double v1 = 0.0;

    [[nodiscard]] bool is_jump() const noexcept { return kind == Kind::Jump; }
    [[nodiscard]] double delta() const noexcept { return v1 - v0; }
};

/// Decomposes the window [s, t] into drift and jump pieces in time order.
/// Jumps at times u in (s, t] are included; a jump at s is not. Throws
/// OutOfDomain unless 0 <= s < t <= horizon.
[[nodiscard]] std::vector<Piece> pieces(const CadlagPath& path, double s, double t);

enum class Direction { Up, Down, Flat };

/// Maximal jump-free stretch on which the path is monotone.
struct MonotoneRun {
    double start = 0.0;
    double end = 0.0;
    Direction direction = Direction::Flat;
    double lo = 0.0;
    double hi = 0.0;
};

/// The continuous part x^cont = x - (running sum of jumps).
[[nodiscard]] CadlagPath continuous_part(const CadlagPath& path);

/// Maximal monotone runs covering [s, t]. Runs are split at every jump and at
/// every change of direction; a constant stretch joins the preceding run of
/// its continuous stretch, or stands alone as a Flat run when none precedes it.
/// A jump at t is followed by a zero-length Flat run at x_t.
[[nodiscard]] std::vector<MonotoneRun> monotone_runs(const CadlagPath& path, double s, double t);

/// Sorted distinct run endpoint values and jump endpoint values on [s, t].
/// Crossing counts are constant in z on every open interval between them.
[[nodiscard]] std::vector<double> critical_levels(const CadlagPath& path, double s, double t);

}  // namespace crosscalc
