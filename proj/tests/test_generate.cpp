#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crosscalc/error.hpp"
#include "crosscalc/generate.hpp"
#include "crosscalc/variation.hpp"
#include "fixtures.hpp"

using namespace crosscalc;

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    SplitMix64 u(42);
    for (int k = 0; k < 1000; ++k) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("generation is deterministic") {
    for (Family f : {Family::StepRandom, Family::Zigzag, Family::Sawtooth, Family::MixedJumpLinear,
                     Family::Counterexample}) {
        const GeneratorSpec spec{f, 17, 1234, 2.0};
        CHECK(generate(spec) == generate(spec));
    }
    CHECK(!(generate({Family::MixedJumpLinear, 17, 1, 1.0}) == generate({Family::MixedJumpLinear, 17, 2, 1.0})));
}

TEST_CASE("zigzag fixture") { CHECK(generate({Family::Zigzag, 3, 0, 1.0}) == fixtures::zigzag3()); }

TEST_CASE("sawtooth and step shapes") {
    const auto saw = generate({Family::Sawtooth, 4, 0, 2.0});
    CHECK(saw.horizon() == 4.0);
    CHECK(variation_summary(saw, 0, 4).utv == 8.0);
    CHECK(variation_summary(saw, 0, 4).dtv == 8.0);
    const auto st = generate({Family::StepRandom, 6, 9, 1.5});
    CHECK(st.size() == 7);
    for (const auto& n : st.nodes()) {
        CHECK(n.interp == Interp::Constant);
        CHECK(std::fabs(n.right) <= 1.5);
    }
    const auto mixed = generate({Family::MixedJumpLinear, 25, 3, 1.0});
    CHECK(mixed.size() == 25);
}

TEST_CASE("counterexample family") {
    const auto one = generate({Family::Counterexample, 1, 0, 1.0});
    int jumps = 0;
    for (const auto& n : one.nodes()) {
        if (n.jump() != 0.0) {
            ++jumps;
            CHECK(std::fabs(n.jump()) == 0.25);
        }
    }
    CHECK(jumps == 2);
    CHECK(variation_summary(one, 0, 1).tv == 0.5);

    const auto big = generate({Family::Counterexample, 150, 0, 1.0});
    double partial = 0.0;
    for (int n = 1; n <= 150; ++n) partial += 1.0 / (static_cast<double>(n) * n);
    const double tv = variation_summary(big, 0, 1).tv;
    CHECK(tv >= 0.818);
    CHECK(tv <= 0.823);
    CHECK(std::fabs(tv - 0.5 * partial) <= 1e-12);
    CHECK(big.horizon() == 1.0);
    CHECK(big.eval(1.0) == 0.0);
    double prev = -1.0;
    for (const auto& n : big.nodes()) {
        CHECK(n.t > prev);
        prev = n.t;
        if (n.jump() != 0.0) CHECK(n.t < 1.0);
    }
}

TEST_CASE("generator validation and parsing") {
    for (const GeneratorSpec& bad : {GeneratorSpec{Family::Zigzag, 0, 0, 1.0}, GeneratorSpec{Family::Zigzag, 3, 0, 0.0},
                                     GeneratorSpec{Family::Zigzag, 3, 0, -1.0}}) {
        try {
            (void)generate(bad);
            FAIL("expected InvalidSpec");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InvalidSpec);
        }
    }
    const auto z = parse_generator("zigzag:3");
    CHECK(z.family == Family::Zigzag);
    CHECK(z.n == 3);
    const auto m = parse_generator("MIXED_JUMP_LINEAR:20:7:2.5");
    CHECK(m.family == Family::MixedJumpLinear);
    CHECK(m.seed == 7);
    CHECK(m.amplitude == 2.5);
    CHECK(parse_generator("step:4").family == Family::StepRandom);
    for (const char* bad : {"zigzag", "zigzag:x", "zigzag:3:y", "spiral:3", "zigzag:3:1:2:5", "zigzag:3:1:"}) {
        try {
            (void)parse_generator(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InvalidSpec);
        }
    }
}
