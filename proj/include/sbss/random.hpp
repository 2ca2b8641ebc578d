#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sbss {

/// Seeded generator with platform-independent helpers.
///
/// std::uniform_int_distribution and std::shuffle differ between standard
/// libraries, so bounded draws and shuffling are done here on top of the
/// fully specified mt19937_64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sbss
