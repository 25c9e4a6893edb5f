#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace tfwave {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based deterministic generator.
///
/// The k-th output is mix64(seed + k * 0x9E3779B97F4A7C15), i.e. the
/// SplitMix64 sequence started at `seed`. Outputs depend only on
/// (seed, counter), so experiments derive one substream per trial and
/// replay bit-identically under any execution schedule.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for trial index `stream` of base seed `seed`.
    static CounterRng substream(std::uint64_t seed, std::uint64_t stream) {
        return CounterRng(mix64(seed ^ mix64(stream * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

    /// Standard normal via Box-Muller (two draws per transform, no rejection).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1], log never hits 0
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Complex with independent standard normal parts.
    std::complex<double> next_cnormal() {
        double re = next_normal();
        double im = next_normal();
        return {re, im};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tfwave
