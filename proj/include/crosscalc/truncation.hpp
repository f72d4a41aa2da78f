#pragma once

#include "crosscalc/path.hpp"

namespace crosscalc {

/// A piecewise-monotone approximation of `base` at corridor width `c`.
struct TruncatedPath {
    CadlagPath base;
    double c = 0.0;
    CadlagPath result;
};

/// Figures checked by the truncation contract.
struct TruncationCheck {
    double sup_distance = 0.0;     // sup_s |base(s) - result(s)|
    double jump_excess = 0.0;      // max_s (|Δresult_s| - |Δbase_s|)
    double tv_result = 0.0;
    double tv_base = 0.0;
    int levels_checked = 0;
    int level_mismatches = 0;      // levels where up/down counts disagree
};

/// Dead-zone (play operator) follower of width c.
///
/// The follower keeps |base - result| <= c/2 and moves only when pushed, by
/// the minimal amount. Its starting value is chosen from the direction in
/// which the base first leaves a band of width c: min + c/2 for an upward
/// exit, max - c/2 for a downward one. A base that never leaves such a band
/// yields a constant result (base(0) when the oscillation is at most c/2).
///
/// The contract (sup distance, jump domination, variation bound, and
/// U^z(result) = U^{z,c}(base) at 50 sampled levels) is verified before
/// returning; any violation throws ContractViolation. Throws
/// NonpositiveWidth for c <= 0.
[[nodiscard]] TruncatedPath truncate(const CadlagPath& path, double c);

/// Measures `candidate` against the truncation contract for (base, c).
/// `sample_levels` levels are compared; levels where z or z ± c/2 sits on a
/// critical level are skipped.
[[nodiscard]] TruncationCheck check_truncation(const CadlagPath& base, double c, const CadlagPath& candidate,
                                               int sample_levels = 50);

/// Throws ContractViolation unless `check` satisfies every bound for width c.
void enforce_truncation_contract(const TruncationCheck& check, double c);

}  // namespace crosscalc
