#include "crosscalc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "crosscalc/error.hpp"

namespace crosscalc {

void ExactSum::add(double x) {
    std::size_t i = 0;
    for (double y : partials_) {
        if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
        const double hi = x + y;
        const double lo = y - (hi - x);
        if (lo != 0.0) partials_[i++] = lo;
        x = hi;
    }
    partials_.resize(i);
    partials_.push_back(x);
}

double ExactSum::value() const {
    std::size_t n = partials_.size();
    if (n == 0) return 0.0;
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
        const double x = hi;
        const double y = partials_[--n];
        hi = x + y;
        const double yr = hi - x;
        lo = y - yr;
        if (lo != 0.0) break;
    }
    // Round half-even across the remaining partials.
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
        const double y = lo * 2.0;
        const double x = hi + y;
        if (y == x - hi) hi = x;
    }
    return hi;
}

double exact_sum(std::span<const double> terms) {
    ExactSum acc;
    for (double x : terms) acc.add(x);
    return acc.value();
}

namespace {

struct Simpson {
    const std::function<double(double)>& f;
    std::size_t budget;
    std::size_t used = 0;

    double eval(double x) {
        if (++used > budget) {
            throw Error(Errc::QuadratureFailed, "adaptive Simpson exceeded " + std::to_string(budget) + " evaluations");
        }
        const double y = f(x);
        if (!std::isfinite(y)) throw Error(Errc::QuadratureFailed, "integrand not finite at " + std::to_string(x));
        return y;
    }

    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        if (!(a < lm && lm < m && m < rm && rm < b)) return whole;
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
        const double half_tol = std::max(0.5 * tol, 1e-16 * std::fabs(left + right));
        return refine(a, m, fa, flm, fm, left, half_tol, depth - 1) +
               refine(m, b, fm, frm, fb, right, half_tol, depth - 1);
    }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
    if (a == b) return 0.0;
    if (b < a) return -adaptive_simpson(f, b, a, opts);
    Simpson s{f, opts.max_evaluations};
    const double fa = s.eval(a);
    const double fb = s.eval(b);
    const double m = 0.5 * (a + b);
    const double fm = s.eval(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return s.refine(a, b, fa, fm, fb, whole, opts.abs_tol, 60);
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

}  // namespace crosscalc
