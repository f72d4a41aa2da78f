#include "crosscalc/occupation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crosscalc/error.hpp"
#include "crosscalc/numeric.hpp"
#include "crosscalc/variation.hpp"

namespace crosscalc {

std::string_view to_string(Identity id) noexcept {
    switch (id) {
        case Identity::BanInd1: return "banind1";
        case Identity::BanInd1_1: return "banind1-1";
        case Identity::BanInd1_11: return "banind1-11";
        case Identity::BanInd1_2: return "banind1-2";
        case Identity::Ito: return "ito";
        case Identity::ItoMeyer: return "itomeyer";
        case Identity::TM1: return "tm1";
        case Identity::TM2: return "tm2";
        case Identity::Tanaka: return "tanaka";
    }
    return "unknown";
}

Identity parse_identity(std::string_view name) {
    for (Identity id : {Identity::BanInd1, Identity::BanInd1_1, Identity::BanInd1_11, Identity::BanInd1_2,
                        Identity::Ito, Identity::ItoMeyer, Identity::TM1, Identity::TM2, Identity::Tanaka}) {
        if (to_string(id) == name) return id;
    }
    throw Error(Errc::InvalidSpec, "unknown identity '" + std::string(name) + "'");
}

IdentityReport make_report(Identity id, double lhs, std::vector<double> rhs, double tolerance) {
    IdentityReport rep;
    rep.identity = id;
    rep.lhs = lhs;
    rep.tolerance = tolerance;
    rep.pass = true;
    for (double r : rhs) {
        const double res = lhs - r;
        rep.residuals.push_back(res);
        if (!(std::fabs(res) <= tolerance * (1.0 + std::fabs(lhs)))) rep.pass = false;
    }
    rep.rhs_forms = std::move(rhs);
    return rep;
}

namespace {

std::int64_t select(const LevelCount& c, Selector s) {
    switch (s) {
        case Selector::Up: return c.up;
        case Selector::Down: return c.down;
        case Selector::UpMinusDown: return c.up - c.down;
        case Selector::Total: return c.total;
    }
    return 0;
}

template <typename CountFn>
double band_sum(const CrossingProfile& profile, const TestFunction& g, CountFn count) {
    ExactSum acc;
    for (std::size_t k = 0; k < profile.bands.size(); ++k) {
        const std::int64_t n = count(profile.bands[k]);
        if (n == 0) continue;
        acc.add(static_cast<double>(n) * g.integral(profile.breakpoints[k], profile.breakpoints[k + 1]));
    }
    return acc.value();
}

}  // namespace

double level_integral(const CrossingProfile& profile, const TestFunction& g, Selector selector) {
    return band_sum(profile, g, [selector](const LevelCount& c) { return select(c, selector); });
}

double local_time_integral(const CrossingProfile& profile, const TestFunction& g) {
    return band_sum(profile, g, [](const LevelCount& c) { return (c.up - c.jump_up) - (c.down - c.jump_down); });
}

IdentityReport identity_report(const CadlagPath& path, const TestFunction& g, double t, Identity id,
                               double tolerance) {
    Selector selector;
    Variant variant;
    switch (id) {
        case Identity::BanInd1: selector = Selector::Up, variant = Variant::Plus; break;
        case Identity::BanInd1_1: selector = Selector::Down, variant = Variant::Minus; break;
        case Identity::BanInd1_11: selector = Selector::UpMinusDown, variant = Variant::Signed; break;
        case Identity::BanInd1_2: selector = Selector::Total, variant = Variant::Abs; break;
        default: throw Error(Errc::InvalidSpec, std::string(to_string(id)) + " is not an occupation identity");
    }
    const auto [lo, hi] = value_range(path, 0.0, t);
    if (!g.is_bounded_on(lo, hi)) {
        throw Error(Errc::UnboundedIntegrand, g.description + " is not bounded on the path range");
    }

    const CrossingProfile profile = crossing_profile(path, 0.0, t);
    const double lhs = level_integral(profile, g, selector);

    // Jump corrections: ∫ over the jump's value interval of g, and of g(x_{s-}).
    ExactSum with_g;
    ExactSum with_left_g;
    for (const Piece& p : pieces(path, 0.0, t)) {
        if (!p.is_jump()) continue;
        const double d = p.delta();
        double integral = 0.0;
        double mass = 0.0;
        switch (variant) {
            case Variant::Plus:
                if (d <= 0.0) continue;
                integral = g.integral(p.v0, p.v1);
                mass = d;
                break;
            case Variant::Minus:
                if (d >= 0.0) continue;
                integral = g.integral(p.v1, p.v0);
                mass = -d;
                break;
            case Variant::Signed:
                integral = g.integral(p.v0, p.v1);
                mass = d;
                break;
            case Variant::Abs:
                integral = g.integral(std::min(p.v0, p.v1), std::max(p.v0, p.v1));
                mass = std::fabs(d);
                break;
        }
        with_g.add(integral);
        with_left_g.add(integral);
        with_left_g.add(-g(p.v0) * mass);
    }

    const double full_left = stieltjes_integral(path, g, {Side::Left, variant, Base::Full}, 0.0, t);
    const double cont_left = stieltjes_integral(path, g, {Side::Left, variant, Base::Continuous}, 0.0, t);
    const double cont_right = stieltjes_integral(path, g, {Side::Right, variant, Base::Continuous}, 0.0, t);
    std::vector<double> rhs{full_left + with_left_g.value(), cont_left + with_g.value(), cont_right + with_g.value()};
    return make_report(id, lhs, std::move(rhs), tolerance);
}

}  // namespace crosscalc
