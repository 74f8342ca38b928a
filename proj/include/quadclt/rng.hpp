// rng.hpp — deterministic random numbers. The generator and the normal
// transform are spelled out here (splitmix64 + Box-Muller on explicit
// 53-bit uniforms) so that streams are reproducible bit-for-bit across
// compilers and standard libraries.

#pragma once

#include <cmath>
#include <cstdint>

namespace quadclt {

// splitmix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Replicate seed derivation: seed_i = mix(master, i). Distinct replicate
// indices give decorrelated streams from one master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    (void)splitmix64(s);
    return splitmix64(s);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform on (0, 1): 53-bit mantissa, offset half an ulp from 0.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    // Standard normal via Box-Muller; pairs are consumed eagerly.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        spare_ = rad * std::sin(ang);
        have_spare_ = true;
        return rad * std::cos(ang);
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace quadclt
