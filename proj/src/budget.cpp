#include "budget.hpp"

#include <cstdlib>
#include <string>

namespace graphlim {

Budgets default_budgets() {
    Budgets b;
    if (const char* env = std::getenv("GRAPHLIM_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && value > 0) {
            b.max_colorings = value;
            b.max_tuples = value;
        }
    }
    return b;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    const std::uint64_t cap = std::uint64_t{1} << 63;
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) return cap;
        result *= base;
    }
    return result;
}

}  // namespace graphlim
