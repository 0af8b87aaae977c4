#ifndef ADIASWEEP_ANALYSIS_HPP
#define ADIASWEEP_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adiasweep/evolve.hpp"

namespace adiasweep {

struct ScanSpec {
    ModelSpec model;
    std::vector<ScheduleKind> kinds;
    std::vector<double> T_values;  // strictly ascending, positive
    double fixed_alpha = 1.0;      // ExpLike rows when not optimizing
    std::vector<double> alpha_grid;
    bool optimize_alpha = false;
    int n_steps = kDefaultSteps;
};

struct FidelityRecord {
    std::string model_id;
    std::string schedule_id;
    double T;
    std::optional<double> alpha;
    double fidelity;
};

struct AlphaOptimum {
    double alpha;
    double fidelity;
    bool at_grid_boundary;
};

// Minimal-gap position of the model's interpolation: closed form for the
// single-qubit model, numeric scan for the 3-spin one.
double model_sc(const ModelSpec& model);

// 40 points log-spaced on [0.05, 20]
std::vector<double> default_alpha_grid();

// Grid evaluation followed by golden-section refinement of the bracketing
// interval to alpha resolution 1e-3. Never returns less than the best grid
// value; ties go to the smaller alpha.
AlphaOptimum optimize_alpha(const ModelSpec& model, double T, const std::vector<double>& alpha_grid,
                            int n_steps = kDefaultSteps);

// One record per (schedule, T), ordered by the spec's schedule list then T.
// Evaluations may run in parallel (capped by ADIASWEEP_THREADS); the output
// ordering does not depend on execution order.
std::vector<FidelityRecord> scan_fidelity(const ScanSpec& spec);

// Smallest T per schedule reaching F_target, linearly interpolated between
// bracketing grid points; absent when the target is never reached.
std::map<std::string, std::optional<double>> crossing_time(
    const std::vector<FidelityRecord>& records, double F_target);

}  // namespace adiasweep

#endif
