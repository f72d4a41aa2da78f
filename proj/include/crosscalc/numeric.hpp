#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace crosscalc {

/// Correctly rounded floating-point sum (Shewchuk partials). The result does
/// not depend on the order of the terms.
class ExactSum {
public:
    void add(double x);
    [[nodiscard]] double value() const;

private:
    std::vector<double> partials_;
};

[[nodiscard]] double exact_sum(std::span<const double> terms);

struct QuadratureOptions {
    double abs_tol = 1e-10;
    std::size_t max_evaluations = 1'000'000;
};

/// Adaptive Simpson on [a, b] (either orientation). Throws QuadratureFailed
/// when the evaluation budget runs out or an evaluation is not finite.
[[nodiscard]] double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                      const QuadratureOptions& opts = {});

/// 17 significant digits, scientific notation; round-trips every double.
[[nodiscard]] std::string format_number(double x);

}  // namespace crosscalc
