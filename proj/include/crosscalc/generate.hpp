#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "crosscalc/path.hpp"

namespace crosscalc {

enum class Family { StepRandom, Zigzag, Sawtooth, MixedJumpLinear, Counterexample };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
/// Accepts step_random (or step), zigzag, sawtooth, mixed_jump_linear (or
/// mixed), counterexample; case-insensitive. Throws InvalidSpec.
[[nodiscard]] Family parse_family(std::string_view name);

struct GeneratorSpec {
    Family family = Family::Zigzag;
    std::int64_t n = 1;
    std::uint64_t seed = 1;
    double amplitude = 1.0;
};

/// splitmix64: state += 0x9e3779b97f4a7c15, then the usual xor-shift-multiply
/// finalizer. Uniform doubles take the top 53 bits.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
    std::uint64_t next() noexcept;
    /// Uniform on [0, 1).
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// Deterministic path for (family, n, seed, amplitude).
///
///  - StepRandom: n jumps at t = 1..n between constant levels amplitude*U(-1,1).
///  - Zigzag: n unit-time ramps alternating 0 -> amplitude -> 0 ...
///  - Sawtooth: n ramps 0 -> amplitude, each followed by a jump back to 0.
///  - MixedJumpLinear: n nodes, random time steps in [0.2, 1), linear or
///    constant segments, jumps at about half of the nodes.
///  - Counterexample: on [0, 1], for k = 1..n a jump up to 1/(2k)^2 at
///    1 - 1/(2k) and back to 0 at 1 - 1/(2k+1); the total variation is
///    checked against 2 Σ 1/(2k)^2.
/// Throws InvalidSpec for n < 1 or a non-positive amplitude.
[[nodiscard]] CadlagPath generate(const GeneratorSpec& spec);

/// Parses `family:n[:seed[:amplitude]]`.
[[nodiscard]] GeneratorSpec parse_generator(std::string_view text);

}  // namespace crosscalc
