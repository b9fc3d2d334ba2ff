#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace combforge {

// All randomness in the library flows through this wrapper so results are
// bit-identical across platforms. The engine is std::mt19937_64, whose output
// sequence is fully specified by the standard; the [0,1) mapping uses the top
// 53 bits directly, so no implementation-defined <random> distribution code is
// involved anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() {
        ++draws_;
        return eng_();
    }

    // Uniform in [0,1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0,bound), rejection sampled to remove modulo bias.
    std::uint32_t below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<std::uint32_t>(x % bound);
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint32_t>(bound))); }

    // Fisher-Yates; consumes size-1 draws.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(static_cast<std::uint32_t>(i))]);
    }

    // Number of raw u64 draws consumed so far. Used as the deterministic cost
    // counter reported by the experiment harness.
    std::uint64_t draws() const { return draws_; }

private:
    std::mt19937_64 eng_;
    std::uint64_t draws_ = 0;
};

// One SplitMix64 step; only used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic sub-seed for stream `stream` of a master seed. Every staged
// pipeline derives its per-stage seeds through this, which is what makes
// replay exact.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    return splitmix64(s);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

} // namespace combforge
