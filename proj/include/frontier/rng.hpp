#pragma once

#include <cmath>
#include <cstdint>

namespace frontier {

// Identifies one independent random stream. Distinct (root, stream) pairs
// give statistically independent sequences, so parallel trials can each own
// a stream and reproduce bit-identically regardless of scheduling.
struct Seed {
    std::uint64_t root = 0;
    std::uint64_t stream = 0;

    Seed with_stream(std::uint64_t s) const { return Seed{root, s + stream}; }
};

namespace detail {
// Stafford variant 13 of the SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
}  // namespace detail

// SplitMix64 in counter form: draw k of a stream is mix(seed + k*GOLDEN),
// where seed is a hash of (root, stream). Pure function of (Seed, step),
// copyable, no hidden state beyond the counter.
class CounterRng {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    explicit CounterRng(Seed s) : state_(derive(s)) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        return detail::mix64(state_);
    }

    // Uniform on (0, 1]; never returns 0 so log() is safe.
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // One uniform step direction on the square lattice (0..3).
    int lattice_step() { return static_cast<int>(next_u64() >> 62); }

    // Bernoulli(1/2).
    bool coin() { return (next_u64() >> 63) != 0; }

private:
    static std::uint64_t derive(Seed s) {
        std::uint64_t h = detail::mix64(s.root + kGolden);
        h ^= detail::mix64(s.stream + 0xD1B54A32D192ED03ull);
        return detail::mix64(h);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Stateless per-site coin used by percolation: the color of a site must be a
// pure function of (seed, site index) so that on-the-fly and pre-sampled
// coloring agree on matched seeds.
inline bool site_coin(Seed s, std::uint64_t site_index) {
    std::uint64_t h = detail::mix64(s.root + CounterRng::kGolden);
    h ^= detail::mix64(s.stream + 0xD1B54A32D192ED03ull);
    return (detail::mix64(detail::mix64(h) + site_index * CounterRng::kGolden) >> 63) != 0;
}

}  // namespace frontier
