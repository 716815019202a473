#ifndef GRAPHLIM_BUDGET_HPP
#define GRAPHLIM_BUDGET_HPP

#include <cstdint>

namespace graphlim {

// Hard enumeration caps. Exceeding a cap is an explicit error, never a
// silent truncation. GRAPHLIM_BUDGET (absolute count) overrides the two
// enumeration caps when set.
struct Budgets {
    std::uint64_t max_colorings = std::uint64_t{1} << 24;
    std::uint64_t max_tuples = std::uint64_t{1} << 24;
    int max_pattern_length = 4;       // largest supported tuple length l
    int max_pattern_vertices = 8;     // largest pattern enumerated per coloring
    std::uint64_t max_taylor_terms = 20000;  // multi-index coefficients per model
};

// Defaults, with the GRAPHLIM_BUDGET environment override applied.
Budgets default_budgets();

// k^n as uint64 with saturation at 2^63; used for budget checks only.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

}  // namespace graphlim

#endif
