#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace arbor {

/// xoshiro256** seeded through splitmix64.
///
/// Bounded draws are implemented here instead of through <random>
/// distributions so that a given seed yields the same forest on every
/// standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_index(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double uniform01();

    /// Independent stream keyed by `stream_id`; the parent state is untouched.
    Rng split(std::uint64_t stream_id) const;

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(uniform_index(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t& x);

}  // namespace arbor
