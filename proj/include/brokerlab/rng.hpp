#pragma once

#include <cstdint>

namespace brokerlab::rng {

// Counter-based uniform stream. The value at index i is a pure function of
// (seed, i), so any worker can jump to an arbitrary position without
// generating the values in between. Splitting a run across workers therefore
// reproduces the sequential sequence exactly: worker w simply starts at the
// index of its first assigned draw.
//
// The generator is the SplitMix64 output function applied to
// seed + (i + 1) * GAMMA.
class Stream {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    explicit Stream(std::uint64_t seed, std::uint64_t start_index = 0)
        : seed_(seed), index_(start_index) {}

    // Uniform double in [0, 1) at a fixed index; does not advance.
    double at(std::uint64_t index) const {
        std::uint64_t z = seed_ + (index + 1) * kGamma;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    // Next uniform in the stream; advances the position.
    double next() { return at(index_++); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t index() const { return index_; }

private:
    std::uint64_t seed_;
    std::uint64_t index_;
};

// Derives an independent stream seed from a master seed and a purpose tag
// (worker index, experiment id, ...). Documented split rule: two mixing
// rounds of the tag folded into the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    std::uint64_t z = master ^ (tag + Stream::kGamma + (master << 6) + (master >> 2));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace brokerlab::rng
