#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crosscalc/crossings.hpp"
#include "crosscalc/path.hpp"
#include "crosscalc/test_function.hpp"

namespace crosscalc {

enum class Selector { Up, Down, UpMinusDown, Total };

/// Identities whose both sides the library evaluates.
enum class Identity {
    BanInd1,     // ∫ U^z g dz
    BanInd1_1,   // ∫ D^z g dz
    BanInd1_11,  // ∫ (U^z - D^z) g dz
    BanInd1_2,   // ∫ N^z g dz
    Ito,
    ItoMeyer,
    TM1,
    TM2,
    Tanaka,
};

[[nodiscard]] std::string_view to_string(Identity id) noexcept;
/// Accepts the CLI names: banind1, banind1-1, banind1-11, banind1-2, ito,
/// itomeyer, tm1, tm2, tanaka. Throws InvalidSpec otherwise.
[[nodiscard]] Identity parse_identity(std::string_view name);

/// Left side, every displayed right-side form, and the residuals lhs - rhs_i.
struct IdentityReport {
    Identity identity = Identity::BanInd1;
    double lhs = 0.0;
    std::vector<double> rhs_forms;
    std::vector<double> residuals;
    double tolerance = 0.0;
    bool pass = false;
};

/// Fills residuals and pass (|lhs - rhs_i| <= tol * (1 + |lhs|) for all i).
[[nodiscard]] IdentityReport make_report(Identity id, double lhs, std::vector<double> rhs, double tolerance);

/// Σ over profile bands of count * ∫_band g. Levels outside the path range
/// contribute nothing.
[[nodiscard]] double level_integral(const CrossingProfile& profile, const TestFunction& g, Selector selector);

/// ∫ ℓ^z g dz using ℓ^z = (U^z - ΔU^z) - (D^z - ΔD^z) on every band.
[[nodiscard]] double local_time_integral(const CrossingProfile& profile, const TestFunction& g);

/// Evaluates one of the four occupation identities on the window [0, t].
/// Requires g bounded on the path range (UnboundedIntegrand otherwise) and
/// throws InvalidSpec for identities that are not occupation identities.
[[nodiscard]] IdentityReport identity_report(const CadlagPath& path, const TestFunction& g, double t, Identity id,
                                             double tolerance = 1e-9);

}  // namespace crosscalc
