#ifndef GRAPHLIM_PARTITIONS_HPP
#define GRAPHLIM_PARTITIONS_HPP

#include <vector>

#include "numbers.hpp"

namespace graphlim {

// Partition of positions {0..l-1}; blocks ordered by least element, elements
// ascending inside each block.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    unsigned block_mask(int b) const;
};

// All Bell(l) partitions in restricted-growth-string order; l <= 8.
std::vector<SetPartition> enumerate_partitions(int l);

// (-1)^{b-1} * (b-1)! -- the partition weight in the cumulant formula.
BigInt partition_weight(int block_count);

// kappa(Z_1..Z_l) from mixed moments: subset_moments[mask] = E[prod over the
// positions set in mask], indexed 1..2^l-1 (entry 0 ignored).
Rational joint_cumulant(int l, const std::vector<Rational>& subset_moments);

// Univariate recursion kappa_r = m_r - sum C(r-1,s-1) kappa_s m_{r-s};
// raw_moments[i] = m_{i+1}, r = size <= 12.
std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& raw_moments);

}  // namespace graphlim

#endif
