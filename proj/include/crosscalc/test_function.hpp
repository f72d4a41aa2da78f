#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace crosscalc {

/// Regularity class of an integrand g.
enum class Smoothness { Continuous, BorelBounded, BorelIntegrable };

/// An integrand g together with an optional exact antiderivative F (F' = g).
///
/// For change-of-variable formulas F plays the role of f, anchored at
/// f(0) = F(0). `bounded_on(lo, hi)` reports whether g is bounded on the
/// closed interval [lo, hi]; when empty g is bounded everywhere.
struct TestFunction {
    std::function<double(double)> g;
    std::function<double(double)> antiderivative;
    Smoothness smoothness = Smoothness::Continuous;
    std::string description;
    std::function<bool(double, double)> bounded_on;

    [[nodiscard]] double operator()(double z) const { return g(z); }
    [[nodiscard]] bool has_antiderivative() const noexcept { return static_cast<bool>(antiderivative); }
    [[nodiscard]] bool is_bounded_on(double lo, double hi) const { return !bounded_on || bounded_on(lo, hi); }

    /// ∫_a^b g (oriented). Uses F when present, otherwise adaptive Simpson.
    [[nodiscard]] double integral(double a, double b) const;
};

/// g(z) = Σ c_k z^k, F(z) = Σ c_k z^{k+1}/(k+1).
[[nodiscard]] TestFunction polynomial(std::vector<double> coefficients);
/// g = sign(z), F = |z|. Borel bounded.
[[nodiscard]] TestFunction sign_function();
/// g = 1_{[a, ∞)}, F(z) = (z - a)_+. Borel bounded.
[[nodiscard]] TestFunction step_function(double a);
/// g = (√·)' on (0, ∞), 0 elsewhere; F(z) = √(z_+). Unbounded near 0+.
[[nodiscard]] TestFunction sqrt_plus();

/// Parses the registry syntax: `poly:c0,c1,...`, `sign`, `step:a`, `sqrtplus`.
/// Throws InvalidSpec on anything else.
[[nodiscard]] TestFunction parse_test_function(std::string_view spec);

}  // namespace crosscalc
