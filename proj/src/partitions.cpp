#include "partitions.hpp"

#include "error.hpp"

namespace graphlim {

unsigned SetPartition::block_mask(int b) const {
    unsigned mask = 0;
    for (int pos : blocks[b]) mask |= 1u << pos;
    return mask;
}

std::vector<SetPartition> enumerate_partitions(int l) {
    if (l < 1 || l > 8) fail(ErrorCode::invalid_argument, "partition size must be in 1..8");
    std::vector<SetPartition> out;
    std::vector<int> rgs(l, 0);
    // restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1
    auto emit = [&]() {
        SetPartition p;
        for (int i = 0; i < l; ++i) {
            if (rgs[i] == static_cast<int>(p.blocks.size())) p.blocks.emplace_back();
            p.blocks[rgs[i]].push_back(i);
        }
        out.push_back(std::move(p));
    };
    auto recurse = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == l) {
            emit();
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[pos] = v;
            self(self, pos + 1, std::max(max_used, v));
        }
    };
    rgs[0] = 0;
    recurse(recurse, 1, 0);
    return out;
}

BigInt partition_weight(int block_count) {
    BigInt w = 1;
    for (int i = 2; i < block_count; ++i) w *= i;
    return (block_count % 2 == 1) ? w : -w;
}

Rational joint_cumulant(int l, const std::vector<Rational>& subset_moments) {
    if (static_cast<int>(subset_moments.size()) < (1 << l))
        fail(ErrorCode::invalid_argument, "subset moment table too small");
    Rational total = 0;
    for (const SetPartition& p : enumerate_partitions(l)) {
        Rational term(partition_weight(p.block_count()));
        for (int b = 0; b < p.block_count(); ++b) term *= subset_moments[p.block_mask(b)];
        total += term;
    }
    return total;
}

std::vector<Rational> moments_to_cumulants(const std::vector<Rational>& raw_moments) {
    int r = static_cast<int>(raw_moments.size());
    if (r > 12) fail(ErrorCode::invalid_argument, "cumulant recursion capped at order 12");
    std::vector<Rational> kappa(r);
    for (int order = 1; order <= r; ++order) {
        Rational value = raw_moments[order - 1];
        for (int s = 1; s < order; ++s)
            value -= Rational(binomial(order - 1, s - 1)) * kappa[s - 1] * raw_moments[order - s - 1];
        kappa[order - 1] = value;
    }
    return kappa;
}

}  // namespace graphlim
