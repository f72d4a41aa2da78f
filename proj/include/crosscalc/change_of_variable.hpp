#pragma once

#include <cstddef>
#include <cstdint>

#include "crosscalc/occupation.hpp"
#include "crosscalc/path.hpp"
#include "crosscalc/test_function.hpp"

namespace crosscalc {

struct JumpSumResult {
    double value = 0.0;
    double absolute_sum = 0.0;
    bool absolutely_convergent = true;
    std::size_t terms_used = 0;
};

/// Σ_{0<s<=t, Δx_s≠0} (f(x_s) - f(x_{s-})) with f the antiderivative of `f`,
/// summed exactly so the value does not depend on the enumeration order.
/// A finite path always yields an absolutely convergent sum; the value is
/// re-derived from one seeded reshuffle of the terms as a check.
[[nodiscard]] JumpSumResult jump_sum(const CadlagPath& path, const TestFunction& f, double t,
                                     std::uint64_t shuffle_seed = 0x9e3779b97f4a7c15ULL);

/// f(x_t) - f(x_0) = ∫ f'(x_s) dx^cont + Σ_{Δx≠0} (f(x_s) - f(x_{s-})).
/// Requires a continuous derivative g (SmoothnessMismatch) and an
/// antiderivative (MissingAntiderivative).
[[nodiscard]] IdentityReport ito_residual(const CadlagPath& path, const TestFunction& f, double t,
                                          double tolerance = 1e-9);

/// Regularity regime of the change-of-variable formula.
enum class CovVariant {
    C1,                // f ∈ C¹; forms: ∫ ℓ^z g dz + jumps
    AbsolutelyContV0,  // g locally integrable, path piecewise monotone; all four forms
    LipschitzV,        // g locally bounded; ∫(U - D) g dz and ∫ ℓ^z g dz + jumps
};

/// Evaluates f(x_t) - f(x_0) against the change-of-variable forms of the
/// chosen regime, with ∫ ℓ^z g dz taken from the crossing profile.
[[nodiscard]] IdentityReport ito_meyer_residual(const CadlagPath& path, const TestFunction& f, double t,
                                                CovVariant variant, double tolerance = 1e-9);

/// 1_{[z,∞)}(x_t) = 1_{[z,∞)}(x_0) + ℓ^z(t) + Σ_{Δx≠0} jumps of the indicator,
/// in integer arithmetic; tolerance is 0. Throws NotSimpleLevel.
[[nodiscard]] IdentityReport tanaka_residual(const CadlagPath& path, double z, double t);

}  // namespace crosscalc
