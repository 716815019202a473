#ifndef GRAPHLIM_VERIFY_HPP
#define GRAPHLIM_VERIFY_HPP

#include <string>
#include <vector>

namespace graphlim {

// Every cross-verification suite the library promises, runnable at two
// budget tiers. Tolerances are pinned next to each check's implementation.
enum class VerifyTier { smoke, full };

const char* tier_name(VerifyTier tier);

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

// Exact CGF vs (1/v) log of the tilted homomorphism density.
CheckResult check_bridge_identity(VerifyTier tier);
// Direct joint cumulants vs the pattern-count decomposition, exact.
CheckResult check_cumulant_decomposition(VerifyTier tier);
// Triangularity, restricted identity, K = E*P = direct kappa, full rank.
CheckResult check_matrix_suite(VerifyTier tier);
// Central finite differences of the CGF vs exact normalized cumulants.
CheckResult check_derivative_consistency(VerifyTier tier);
// |kappa_r(Y)| against the dependency-graph bound on unit directions.
CheckResult check_dependency_bound(VerifyTier tier);
// Joint cumulants of cross-edge indicators vs 2^{r-1} * spanning trees.
CheckResult check_tree_lemma(VerifyTier tier);
// Taylor truncation error decreasing in order and below the tail majorant.
CheckResult check_taylor_convergence(VerifyTier tier);
// i(F,C_n)/n and ball distributions constant along the cycle family.
CheckResult check_cycle_constancy(VerifyTier tier);
// Elementary counting identities and monotonicity, exact.
CheckResult check_counting_identities(VerifyTier tier);
// Two smoke runs of everything above serialize byte-identically.
CheckResult check_determinism(VerifyTier tier);

struct VerifyReport {
    VerifyTier tier = VerifyTier::smoke;
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

// Runs all ten checks. A non-empty inject_failure must name a check id; that
// check's result is forced to failure (exercises the failure path end to end).
VerifyReport verify_all(VerifyTier tier, const std::string& inject_failure = "");

std::string serialize_verify_report(const VerifyReport& report);

}  // namespace graphlim

#endif
