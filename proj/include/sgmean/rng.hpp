#pragma once

#include <cmath>
#include <cstdint>

namespace sgmean {

/// Deterministic 64-bit generator with value semantics. The update is the
/// splitmix64 finalizer over a Weyl sequence, written out in full so ports in
/// other languages can reproduce the stream bit for bit:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
///
/// uniform() maps the top 53 bits to [0, 1); normal() draws two uniforms and
/// returns the cosine branch of the Box-Muller transform (one normal per
/// call, nothing cached, so the stream position is trivial to reason about).
/// split(salt) derives an independent child stream; children with distinct
/// salts never share a state by construction.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1); 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; u1 is shifted into (0, 1] so the log
    /// never sees zero.
    double normal() {
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Uniform integer in [0, n). Modulo bias is below 2^-57 for the small n
    /// used here.
    int below(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

    /// Child stream keyed by salt: seed' = mix(state ^ (PHI * (salt + 1))),
    /// with mix the splitmix64 finalizer above.
    Rng split(uint64_t salt) const {
        uint64_t z = state_ ^ (0x9E3779B97F4A7C15ull * (salt + 1));
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return Rng(z ^ (z >> 31));
    }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

} // namespace sgmean
