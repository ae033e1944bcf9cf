#ifndef ORDCLOSE_RANDOM_HPP
#define ORDCLOSE_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ordclose {

// Reproducible pseudo-randomness. Draws are reduced from raw mt19937_64
// output so sequences are identical across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

    // Uniform integer in [lo, hi].
    long integer(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    bool coin() { return (engine_() & 1U) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace ordclose

#endif
