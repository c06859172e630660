#pragma once
// Built-in verification suite behind `verify`: conservation laws, oracle
// equivalence, derivative checks, convergence and scaling audits. Each check
// returns its measured figure of merit against the tolerance it must beat.

#include "dyad/coupling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dyad {

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    double measured = 0.0;   // worst-case figure of merit
    double tolerance = 0.0;  // pass iff measured <= tolerance
    bool pass = false;
    std::string detail;      // human-readable context
};

// Individual checks (sizes chosen by the caller; run_verify picks
// quick/full presets).
CheckResult check_green_small_x();
CheckResult check_gradients(int points_per_derivative, uint64_t seed);
CheckResult check_unitarity(int grid_n);
CheckResult check_oracle_equivalence(int n_couplings, uint64_t seed);
CheckResult check_momentum_balance(int n_points, uint64_t seed);
CheckResult check_near_field();
CheckResult check_nonconservative_net(int n_points, uint64_t seed);
CheckResult check_displacement_consistency();
CheckResult check_offresonant_convergence(const std::vector<double>& xs);
CheckResult check_scaling();

// Momentum-balance residual for externally supplied rates, used by the
// mutation smoke test: |p_rate + f_net| / scale at (cfg, T).
double momentum_balance_residual(const CouplingRates& rates,
                                 const DyadConfig& cfg, double T_s);

std::vector<CheckResult> run_verify(VerifyLevel level);

// Renders the report (one line per check, measured vs tolerance) and
// returns true iff everything passed.
bool print_report(const std::vector<CheckResult>& checks, std::ostream& os);

}  // namespace dyad
