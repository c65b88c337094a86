#pragma once

#include <cstdint>
#include <random>

namespace mgm {

// Seeded generator with explicit sampling helpers. mt19937_64 output is
// standardized, so fixed seeds reproduce across platforms; the standard
// distributions are not, which is why sampling is done by hand.
class rng {
public:
    explicit rng(std::uint64_t seed) : gen_(seed) {}

    auto next() -> std::uint64_t { return gen_(); }

    auto below(std::uint64_t n) -> std::uint64_t { return n ? next() % n : 0; }

    // uniform in [0, 1)
    auto real() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    auto shuffle(std::vector<T> & v) -> void
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 gen_;
};

}
