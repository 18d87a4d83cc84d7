#pragma once

#include <cstdint>

namespace mdf {

// SplitMix64 finalizer. Good avalanche, cheap, and stateless.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based generator: value (seed, stream, counter) -> u64/double.
// Each draw is a pure function of its coordinates, so parallel consumers
// produce the same values as a sequential sweep.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ull))) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return splitmix64(state_ ^ (counter * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
    }

    // uniform in [0, 1)
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

private:
    std::uint64_t state_;
};

// Small sequential convenience wrapper around CounterRng.
class SeqRng {
public:
    explicit SeqRng(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}
    std::uint64_t bits() { return rng_.bits(n_++); }
    double uniform() { return rng_.uniform(n_++); }
    double uniform(double lo, double hi) { return rng_.uniform(n_++, lo, hi); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    CounterRng rng_;
    std::uint64_t n_ = 0;
};

}  // namespace mdf
