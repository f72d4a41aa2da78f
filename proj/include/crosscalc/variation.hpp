#pragma once

#include <utility>
#include <vector>

#include "crosscalc/path.hpp"
#include "crosscalc/test_function.hpp"

namespace crosscalc {

struct VariationSummary {
    double tv = 0.0;
    double utv = 0.0;
    double dtv = 0.0;
    std::pair<double, double> window{0.0, 0.0};
};

/// Total, upward and downward variation on [s, t], read off the monotone
/// pieces and jumps (no partition search).
[[nodiscard]] VariationSummary variation_summary(const CadlagPath& path, double s, double t);

/// A drift stretch [t0, t1) carrying a linear density of the time measure.
struct MeasurePiece {
    double t0 = 0.0;
    double t1 = 0.0;
    double mass = 0.0;
};

struct MeasureAtom {
    double t = 0.0;
    double mass = 0.0;
};

/// Jordan-decomposed time measure induced by a path (continuous pieces + atoms).
struct TimeMeasure {
    std::vector<MeasurePiece> continuous_pieces;
    std::vector<MeasureAtom> atoms;

    [[nodiscard]] double total() const;
};

enum class Side { Left, Right };
enum class Variant { Signed, Plus, Minus, Abs };
enum class Base { Full, Continuous };

/// Measure dx, (dx)+, (dx)- or |dx| on (s, t], of the full path or its
/// continuous part. Atoms sit at jump times only.
[[nodiscard]] TimeMeasure time_measure(const CadlagPath& path, Variant variant, Base base, double s, double t);

struct StieltjesQuery {
    Side side = Side::Left;
    Variant variant = Variant::Signed;
    Base base = Base::Full;
};

/// ∫_{(s,t]} g(x_{u-} or x_u) dμ for μ selected by `q`.
///
/// On a drift piece the substitution z = x_u turns the integral into
/// ∫ g(z) dz over the piece's value range, evaluated with the antiderivative
/// when available and adaptive Simpson otherwise. Throws UnboundedIntegrand
/// when g has no antiderivative and is unbounded on the path range.
[[nodiscard]] double stieltjes_integral(const CadlagPath& path, const TestFunction& g, StieltjesQuery q, double s,
                                        double t);

/// Convenience overload for the window (0, horizon].
[[nodiscard]] double stieltjes_integral(const CadlagPath& path, const TestFunction& g, StieltjesQuery q);

/// (lo, hi) of the closed value range of the path on [s, t] (left limits included).
[[nodiscard]] std::pair<double, double> value_range(const CadlagPath& path, double s, double t);

}  // namespace crosscalc
