#include "crosscalc/variation.hpp"

#include <algorithm>
#include <cmath>

#include "crosscalc/error.hpp"
#include "crosscalc/numeric.hpp"

namespace crosscalc {

VariationSummary variation_summary(const CadlagPath& path, double s, double t) {
    ExactSum up;
    ExactSum down;
    for (const Piece& p : pieces(path, s, t)) {
        const double d = p.delta();
        if (d > 0.0) up.add(d);
        if (d < 0.0) down.add(-d);
    }
    VariationSummary out;
    out.utv = up.value();
    out.dtv = down.value();
    out.tv = out.utv + out.dtv;
    out.window = {s, t};
    return out;
}

double TimeMeasure::total() const {
    ExactSum acc;
    for (const auto& p : continuous_pieces) acc.add(p.mass);
    for (const auto& a : atoms) acc.add(a.mass);
    return acc.value();
}

namespace {

double variant_mass(Variant v, double delta) {
    switch (v) {
        case Variant::Signed: return delta;
        case Variant::Plus: return std::max(delta, 0.0);
        case Variant::Minus: return std::max(-delta, 0.0);
        case Variant::Abs: return std::fabs(delta);
    }
    return 0.0;
}

// ∫ g(z) dz over the value range swept by a drift piece, with the orientation
// the variant prescribes.
double drift_contribution(const TestFunction& g, Variant v, double v0, double v1) {
    switch (v) {
        case Variant::Signed: return g.integral(v0, v1);
        case Variant::Plus: return v1 > v0 ? g.integral(v0, v1) : 0.0;
        case Variant::Minus: return v1 < v0 ? g.integral(v1, v0) : 0.0;
        case Variant::Abs: return g.integral(std::min(v0, v1), std::max(v0, v1));
    }
    return 0.0;
}

}  // namespace

TimeMeasure time_measure(const CadlagPath& path, Variant variant, Base base, double s, double t) {
    TimeMeasure m;
    for (const Piece& p : pieces(path, s, t)) {
        const double mass = variant_mass(variant, p.delta());
        if (p.is_jump()) {
            if (base == Base::Full && mass != 0.0) m.atoms.push_back({p.t0, mass});
        } else if (mass != 0.0) {
            m.continuous_pieces.push_back({p.t0, p.t1, mass});
        }
    }
    return m;
}

std::pair<double, double> value_range(const CadlagPath& path, double s, double t) {
    double lo = path.eval(s);
    double hi = lo;
    for (const Piece& p : pieces(path, s, t)) {
        lo = std::min({lo, p.v0, p.v1});
        hi = std::max({hi, p.v0, p.v1});
    }
    return {lo, hi};
}

double stieltjes_integral(const CadlagPath& path, const TestFunction& g, StieltjesQuery q, double s, double t) {
    if (!g.has_antiderivative()) {
        const auto [lo, hi] = value_range(path, s, t);
        if (!g.is_bounded_on(lo, hi)) {
            throw Error(Errc::UnboundedIntegrand, g.description + " is unbounded on the path range");
        }
    }
    ExactSum acc;
    for (const Piece& p : pieces(path, s, t)) {
        if (!p.is_jump()) {
            acc.add(drift_contribution(g, q.variant, p.v0, p.v1));
            continue;
        }
        if (q.base == Base::Continuous) continue;
        const double mass = variant_mass(q.variant, p.delta());
        if (mass == 0.0) continue;
        const double weight = g(q.side == Side::Left ? p.v0 : p.v1);
        acc.add(weight * mass);
    }
    return acc.value();
}

double stieltjes_integral(const CadlagPath& path, const TestFunction& g, StieltjesQuery q) {
    return stieltjes_integral(path, g, q, 0.0, path.horizon());
}

}  // namespace crosscalc
