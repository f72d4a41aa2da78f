#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "crosscalc/crossings.hpp"
#include "crosscalc/error.hpp"
#include "crosscalc/oracles.hpp"
#include "crosscalc/variation.hpp"
#include "fixtures.hpp"

using namespace crosscalc;

namespace {

bool edge_is_critical(const CadlagPath& p, double y, double c) {
    const auto levels = critical_levels(p, 0, p.horizon());
    return std::binary_search(levels.begin(), levels.end(), y + 0.5 * c) ||
           std::binary_search(levels.begin(), levels.end(), y - 0.5 * c);
}

CadlagPath random_linear(std::uint64_t seed, int nodes) {
    SplitMix64 rng(seed);
    std::vector<PathNode> out;
    double t = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double v = rng.uniform(-1, 1);
        out.push_back({t, v, v, k + 1 < nodes ? Interp::Linear : Interp::Constant});
        t += rng.uniform(0.2, 1.0);
    }
    return CadlagPath::build(std::move(out));
}

}  // namespace

TEST_CASE("grid crossing oracle examples") {
    const auto r = grid_crossing_oracle(fixtures::ramp(), 0.5, 0.4, 0, 1, {100, 0});
    CHECK(r.up == 1);
    CHECK(r.down == 0);
    const auto z = grid_crossing_oracle(fixtures::zigzag3(), 0.5, 0.4, 0, 3, {10000, 0});
    CHECK(z.up == 2);
    CHECK(z.down == 1);
    SplitMix64 rng(3);
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto p = fixtures::random_path(k);
        if (p.size() < 2) continue;
        const double y = rng.uniform(-1, 1), c = rng.uniform(0.01, 1);
        if (edge_is_critical(p, y, c)) continue;
        const auto g = grid_crossing_oracle(p, y, c, 0, p.horizon(), {2, 0});
        CHECK(g.up <= 1);
        CHECK(g.down <= 1);
    }
}

TEST_CASE("grid crossing oracle refuses critical corridor edges") {
    try {
        (void)grid_crossing_oracle(fixtures::zigzag3(), 0.8, 0.4, 0, 3, {100, 0});
        FAIL("expected LevelAtExtremum");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LevelAtExtremum);
    }
    try {
        (void)grid_crossing_oracle(fixtures::zigzag3(), 0.5, 0.4, 0, 3, {1, 0});
        FAIL("expected InvalidSpec");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidSpec);
    }
}

TEST_CASE("grid counts never exceed exact counts and converge under refinement") {
    SplitMix64 rng(5);
    int converged = 0, cases = 0;
    for (std::uint64_t k = 0; k < 300; ++k) {
        const auto p = fixtures::random_path(k, 20);
        if (p.size() < 2) continue;
        const double T = p.horizon();
        const double y = rng.uniform(-0.8, 0.8), c = rng.uniform(0.01, 0.8);
        if (edge_is_critical(p, y, c)) continue;
        ++cases;
        const auto exact = corridor_crossings(p, y, c, 0, T);
        GridCrossings prev{0, 0};
        bool hit = false;
        for (int rounds = 0; rounds <= 14; ++rounds) {
            const auto g = grid_crossing_oracle(p, y, c, 0, T, {9, rounds});
            CHECK(g.up <= exact.up);
            CHECK(g.down <= exact.down);
            CHECK(g.up >= prev.up);
            CHECK(g.down >= prev.down);
            prev = g;
            if (g.up == exact.up && g.down == exact.down) hit = true;
        }
        if (hit) ++converged;
    }
    CHECK(converged == cases);
}

TEST_CASE("riemann-stieltjes oracle examples") {
    const auto one = polynomial({1});
    for (std::uint64_t k = 0; k < 50; ++k) {
        const auto p = fixtures::random_path(k);
        if (p.size() < 2) continue;
        const double utv = variation_summary(p, 0, p.horizon()).utv;
        for (std::int64_t cells : {1, 7, 1000}) {
            CHECK(std::fabs(riemann_stieltjes_oracle(p, one, {Side::Left, Variant::Plus, Base::Full}, cells) - utv) <=
                  1e-12 * (1 + utv));
        }
    }
    const double ramp = riemann_stieltjes_oracle(fixtures::ramp(), polynomial({0, 1}),
                                                 {Side::Left, Variant::Signed, Base::Full}, 10000);
    CHECK(std::fabs(ramp - 0.5) <= 1e-4);
    const auto stp = generate({Family::StepRandom, 10, 4, 1.0});
    for (const auto& g : fixtures::bounded_functions()) {
        const StieltjesQuery q{Side::Left, Variant::Abs, Base::Full};
        CHECK(std::fabs(riemann_stieltjes_oracle(stp, g, q, 3) - stieltjes_integral(stp, g, q)) <= 1e-14);
    }
}

TEST_CASE("riemann-stieltjes oracle converges at first order") {
    // g' > 0 on the range keeps the leading error term from cancelling. |dx|
    // mixes both error signs (up and down stretches), so Abs is left out.
    const auto g = polynomial({0, 3, 0, 1});
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto p = random_linear(seed, 8);
        for (Side side : {Side::Left, Side::Right}) {
            for (Variant v : {Variant::Signed, Variant::Plus, Variant::Minus}) {
                const StieltjesQuery q{side, v, Base::Full};
                const double exact = stieltjes_integral(p, g, q);
                const double e1 = std::fabs(riemann_stieltjes_oracle(p, g, q, 2000) - exact);
                const double e2 = std::fabs(riemann_stieltjes_oracle(p, g, q, 4000) - exact);
                const double e3 = std::fabs(riemann_stieltjes_oracle(p, g, q, 8000) - exact);
                CHECK(e1 / e2 >= 1.7);
                CHECK(e1 / e2 <= 2.3);
                CHECK(e2 / e3 >= 1.7);
                CHECK(e2 / e3 <= 2.3);
            }
        }
    }
}

TEST_CASE("sampled level integral oracle examples") {
    const auto one = polynomial({1});
    CHECK(std::fabs(sampled_level_integral_oracle(fixtures::ramp(), one, Selector::Up, 100000) - 1.0) <= 1e-4);
    const auto flat = CadlagPath::build({{0, 3, 3, Interp::Constant}, {1, 3, 3, Interp::Constant}});
    CHECK(sampled_level_integral_oracle(flat, one, Selector::Total, 100) == 0.0);
    CHECK(std::fabs(sampled_level_integral_oracle(fixtures::linear_through({0, 1, 0}), one, Selector::Total,
                                                  100000) -
                    2.0) <= 1e-4);
    try {
        (void)sampled_level_integral_oracle(flat, one, Selector::Up, 5);
        FAIL("expected InvalidSpec");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidSpec);
    }
}

TEST_CASE("sampled level integral oracle is within its midpoint-rule bound") {
    SplitMix64 rng(13);
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto p = fixtures::random_path(k, 20);
        if (p.size() < 2) continue;
        const auto prof = crossing_profile(p, 0, p.horizon());
        const double span = prof.breakpoints.back() - prof.breakpoints.front();
        if (span == 0.0) continue;
        const auto g = polynomial({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        double sup_g = 0.0, max_count = 0.0;
        for (double z = prof.breakpoints.front(); z <= prof.breakpoints.back(); z += span / 1000) {
            sup_g = std::max(sup_g, std::fabs(g(z)));
        }
        for (const auto& b : prof.bands) max_count = std::max(max_count, static_cast<double>(b.total));
        for (Selector sel : {Selector::Up, Selector::Down, Selector::UpMinusDown, Selector::Total}) {
            const double exact = level_integral(prof, g, sel);
            for (std::int64_t n : {1000, 10000}) {
                const double h = span / static_cast<double>(n);
                // One straddling cell per breakpoint, plus the smooth midpoint error.
                const double bound = h * static_cast<double>(prof.breakpoints.size()) * max_count * (sup_g + 4) +
                                     h * h * span * max_count * 10;
                CHECK(std::fabs(sampled_level_integral_oracle(p, g, sel, n) - exact) <= bound);
            }
        }
    }
}
