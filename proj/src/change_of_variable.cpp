#include "crosscalc/change_of_variable.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "crosscalc/crossings.hpp"
#include "crosscalc/error.hpp"
#include "crosscalc/numeric.hpp"
#include "crosscalc/variation.hpp"

namespace crosscalc {

namespace {

void require_antiderivative(const TestFunction& f) {
    if (!f.has_antiderivative()) {
        throw Error(Errc::MissingAntiderivative, f.description + " carries no antiderivative f");
    }
}

void require_continuous(const TestFunction& f, std::string_view formula) {
    if (f.smoothness != Smoothness::Continuous) {
        throw Error(Errc::SmoothnessMismatch,
                    std::string(formula) + " needs a continuous derivative; " + f.description + " is not");
    }
}

}  // namespace

JumpSumResult jump_sum(const CadlagPath& path, const TestFunction& f, double t, std::uint64_t shuffle_seed) {
    require_antiderivative(f);
    std::vector<double> terms;
    ExactSum absolute;
    for (const Piece& p : pieces(path, 0.0, t)) {
        if (!p.is_jump()) continue;
        const double term = f.antiderivative(p.v1) - f.antiderivative(p.v0);
        terms.push_back(term);
        absolute.add(std::fabs(term));
    }
    JumpSumResult out;
    out.value = exact_sum(terms);
    out.absolute_sum = absolute.value();
    out.terms_used = terms.size();

    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(terms.begin(), terms.end(), rng);
    if (exact_sum(terms) != out.value) {
        throw Error(Errc::ContractViolation, "jump sum depends on the enumeration order");
    }
    out.absolutely_convergent = std::isfinite(out.absolute_sum);
    return out;
}

IdentityReport ito_residual(const CadlagPath& path, const TestFunction& f, double t, double tolerance) {
    require_continuous(f, "ito");
    require_antiderivative(f);
    const double lhs = f.antiderivative(path.eval(t)) - f.antiderivative(path.eval(0.0));
    const double drift = stieltjes_integral(path, f, {Side::Right, Variant::Signed, Base::Continuous}, 0.0, t);
    const double jumps = jump_sum(path, f, t).value;
    return make_report(Identity::Ito, lhs, {drift + jumps}, tolerance);
}

IdentityReport ito_meyer_residual(const CadlagPath& path, const TestFunction& f, double t, CovVariant variant,
                                  double tolerance) {
    require_antiderivative(f);
    Identity id = Identity::ItoMeyer;
    switch (variant) {
        case CovVariant::C1:
            require_continuous(f, "itomeyer");
            break;
        case CovVariant::AbsolutelyContV0:
            id = Identity::TM1;
            break;
        case CovVariant::LipschitzV: {
            id = Identity::TM2;
            const auto [lo, hi] = value_range(path, 0.0, t);
            if (f.smoothness == Smoothness::BorelIntegrable && !f.is_bounded_on(lo, hi)) {
                throw Error(Errc::SmoothnessMismatch, "tm2 needs g locally bounded; " + f.description + " is not");
            }
            break;
        }
    }

    const auto& F = f.antiderivative;
    const double lhs = F(path.eval(t)) - F(path.eval(0.0));
    const CrossingProfile profile = crossing_profile(path, 0.0, t);
    const double jumps = jump_sum(path, f, t).value;
    const double local_time_form = local_time_integral(profile, f) + jumps;
    if (variant == CovVariant::C1) return make_report(id, lhs, {local_time_form}, tolerance);

    const double up_minus_down = level_integral(profile, f, Selector::UpMinusDown);
    if (variant == CovVariant::LipschitzV) return make_report(id, lhs, {up_minus_down, local_time_form}, tolerance);

    ExactSum compensated;
    for (const Piece& p : pieces(path, 0.0, t)) {
        if (!p.is_jump()) continue;
        compensated.add(F(p.v1) - F(p.v0));
        compensated.add(-f(p.v0) * p.delta());
    }
    const double left_full = stieltjes_integral(path, f, {Side::Left, Variant::Signed, Base::Full}, 0.0, t);
    const double right_cont = stieltjes_integral(path, f, {Side::Right, Variant::Signed, Base::Continuous}, 0.0, t);
    return make_report(id, lhs, {up_minus_down, left_full + compensated.value(), right_cont + jumps, local_time_form},
                       tolerance);
}

IdentityReport tanaka_residual(const CadlagPath& path, double z, double t) {
    if (!is_simple_level(path, z, t)) {
        throw Error(Errc::NotSimpleLevel, "level " + std::to_string(z) + " is not simple on [0, t]");
    }
    auto ind = [z](double v) -> std::int64_t { return v >= z ? 1 : 0; };
    std::int64_t jumps = 0;
    for (const Piece& p : pieces(path, 0.0, t)) {
        if (p.is_jump()) jumps += ind(p.v1) - ind(p.v0);
    }
    const std::int64_t ell = level_statistics(path, z, t).ell;
    const std::int64_t lhs = ind(path.eval(t));
    const std::int64_t rhs = ind(path.eval(0.0)) + ell + jumps;
    return make_report(Identity::Tanaka, static_cast<double>(lhs), {static_cast<double>(rhs)}, 0.0);
}

}  // namespace crosscalc
