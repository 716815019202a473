#ifndef GRAPHLIM_RNG_HPP
#define GRAPHLIM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace graphlim {

// Seeded generator with hand-rolled derived draws, so that identical seeds
// give identical streams on every platform (std::uniform_*_distribution is
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        return bound == 0 ? 0 : next_u64() % bound;
    }

    // uniform in [0, 1)
    double unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [-cap, cap]
    double symmetric(double cap) { return (2.0 * unit() - 1.0) * cap; }

    // +1 or -1
    int sign() { return (next_u64() & 1u) ? 1 : -1; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace graphlim

#endif
