#pragma once
// Config-driven parameter sweeps: JSON config in, deterministic CSV/JSON
// table out. Columns are a fixed contract (see column_names); values are SI.
//
// Config schema (JSON):
// {
//   "system": { "rydberg":  {"n": 70, "isotope_mass_u": 7.016,
//                            "lambda0_um": 448.0}            // optional um
//             | "explicit": {"mu_Cm": 1e-26 | [x,y,z],
//                            "omega0": 4.2e12, "gamma0": 5.4e5,
//                            "mass_kg": 1.16e-26} },
//   "geometry": { "k0R": 0.77 }
//             | { "sweep": {"start":0.3,"stop":3.0,"count":200,
//                           "spacing":"linear"|"log"} },
//   "times":    { "gamma0_T": [0.5, 1.0] } | { "sweep": {...} },   // Gamma0*T
//   "observables": ["populations","forces","emission","displacement"],
//   "emission_mode": "as_printed"|"consistent",          // optional
//   "quadrature": {"order":16,"base_panels":8,"rel_tol":1e-10},  // optional
//   "output": { "path": "out.csv", "format": "csv"|"json" }
// }
//
// Scalar mu_Cm uses the canonical geometry (both dipoles along x, separation
// along z); a 3-vector is used for both dipoles verbatim (separation stays
// along z). Geometry/times sweeps require count >= 1 and start < stop;
// every physical value must be positive; the observable list cannot be
// empty. Validation reports every violation at once.

#include "dyad/emission.hpp"
#include "dyad/forces.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dyad {

enum class Observable { populations, forces, emission, displacement };
enum class OutputFormat { csv, json };

struct RunConfig {
    // System, with r_vec direction fixed; |r_vec| is set per grid point.
    DyadConfig base;
    bool is_rydberg = false;
    int rydberg_n = 0;

    std::vector<double> k0R_values;      // sorted ascending
    std::vector<double> gamma0T_values;  // sorted ascending
    std::vector<Observable> observables; // deduplicated, declaration order
    EmissionMode emission_mode = EmissionMode::consistent;
    QuadSpec quad;
    std::string output_path = "sweep.csv";
    OutputFormat format = OutputFormat::csv;

    bool has(Observable o) const;
};

// Parses and validates; throws validation_error whose what() is a JSON
// object {"errors": [ ... ]} listing every violation.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

struct SweepResult {
    std::vector<std::string> columns;
    // rows[i] aligned with columns; sorted by (k0R, T).
    std::vector<std::vector<double>> rows;
};

// Column set for an observable list (fixed order contract):
// k0R, T_s, then populations -> P_A, P_B; emission -> P_gamma,
// unitarity_defect; forces -> Fc_A_R, Fc_B_R, Fc_net_R, Fnc_{A,B,net}_{x,y,z},
// Foff_A_R; displacement -> S_CM_m. Forces in newtons, S_CM in meters,
// unitarity_defect = |P_A + P_B + P_gamma - 1|.
std::vector<std::string> column_names(const RunConfig& cfg);

// Evaluates the grid; `threads` = 0 picks hardware concurrency. Output is
// deterministic: identical bytes for identical configs, any thread count.
SweepResult run_sweep(const RunConfig& cfg, unsigned threads = 0);

std::string to_csv(const SweepResult& result);
std::string to_json(const SweepResult& result);

// Full `run` operation: sweep + write file + one-line summary to `summary`.
// Returns the written byte count.
size_t run_to_file(const RunConfig& cfg, unsigned threads,
                   std::ostream& summary);

}  // namespace dyad
