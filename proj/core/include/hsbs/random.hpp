#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace hsbs {

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard library distributions are implementation-defined, so
/// every derived draw is spelled out here:
///   uniform01  = (next() >> 11) * 2^-53
///   bounded(n) = next() % n, rejecting draws below (2^64 - n) % n
///   normal     = Box-Muller on (1 - uniform01, uniform01), both outputs used in turn
///   shuffle    = Fisher-Yates from the back, swapping i with bounded(i + 1)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t bounded(std::uint64_t n);

    double normal();

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(bounded(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hsbs
