#pragma once

#include <cstdint>
#include <random>

namespace rankcurv::detail {

// mt19937_64 output is fixed by the standard; the distributions are not, so the
// mapping to ranges is done here to keep generated objects identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = engine_();
        while (x >= limit)
            x = engine_();
        return x % n;
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace rankcurv::detail
