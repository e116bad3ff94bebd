#pragma once

#include <cstdint>
#include <random>

namespace levyheat {

/// Bijective 64-bit finalizer (SplitMix64). Used for seed derivation; being a
/// bijection makes derived streams collision-free in the index for a fixed master.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Stable per-replica seed: seed_i = mix64(master + GOLDEN * (i + 1)).
/// The affine step is injective mod 2^64, so distinct indices never collide.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t replica_index) {
    return mix64(master_seed + 0x9e3779b97f4a7c15ULL * (replica_index + 1));
}

/// Caller-owned random stream. All distribution draws are hand-rolled on top of
/// mt19937_64 so results are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard exponential, strictly positive.
    double exponential() {
        double u = uniform01();
        return -std::log(1.0 - u); // 1-u in (0,1], no log(0)
    }

    /// Exact Poisson draw by product-of-uniforms, chunked to avoid exp underflow.
    std::uint64_t poisson(double mean);

private:
    std::mt19937_64 engine_;
};

} // namespace levyheat
