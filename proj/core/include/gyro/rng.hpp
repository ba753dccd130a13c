#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gyro {

/// Seeded 64-bit generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Substream seeds are derived with SplitMix64 finalizers, and the
/// real-valued deviates are built from raw 64-bit draws with plain arithmetic
/// (no std:: distributions, whose algorithms are implementation-defined), so a
/// given seed produces the same stream on every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for (seed, stream key, index). Used per worker and per sample.
    static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// FNV-1a over the bytes of `key`; stable stream keys for named properties.
std::uint64_t stream_key(std::string_view key) noexcept;

}  // namespace gyro
