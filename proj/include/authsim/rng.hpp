#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>

namespace authsim::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based splittable random stream (splitmix64 core).
///
/// A stream is keyed, not seeded sequentially: independent streams are
/// derived by mixing (seed, key0, key1, ...) so that parallel consumers
/// produce identical draws regardless of scheduling order.
class Stream {
public:
    explicit Stream(std::uint64_t state) : state_(state) {}

    static Stream keyed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
        std::uint64_t s = mix64(seed + kGolden);
        for (std::uint64_t k : keys) {
            s = mix64(s ^ mix64(k + kGolden));
        }
        return Stream(s);
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1].
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard real normal N(0, 1) via Box-Muller; the spare is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Standard circularly-symmetric complex normal CN(0, 1):
    /// real and imaginary parts are N(0, 1/2). Consumes exactly two uniforms.
    std::complex<double> cnormal() {
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double a = 6.283185307179586476925286766559 * uniform();
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace authsim::rng
