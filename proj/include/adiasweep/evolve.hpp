#ifndef ADIASWEEP_EVOLVE_HPP
#define ADIASWEEP_EVOLVE_HPP

#include <vector>

#include "adiasweep/schedules.hpp"

namespace adiasweep {

inline constexpr int kDefaultSteps = 40000;
inline constexpr int kMinSteps = 100;

struct EvolutionSpec {
    ModelSpec model;
    Schedule schedule;
    int n_steps = kDefaultSteps;
    int record_every = 0;  // 0 = final state only
};

struct TrajectoryPoint {
    double t;
    double u;  // swept parameter: omega_z for LZ, s otherwise
    double fidelity_ground;
    double norm;
};

struct Trajectory {
    std::vector<TrajectoryPoint> samples;
    StateVector final_state;
    double final_fidelity;
};

// Midpoint piecewise-constant unitary propagation: at each step the state
// is advanced by exp(-i H(t_k + dt/2) dt), starting from the instantaneous
// ground state of H(0) and scored against the ground state of H(T).
Trajectory evolve(const EvolutionSpec& spec);

// Lowest eigenvector of H; rejects a degenerate ground level (gap < 1e-9).
StateVector ground_state(const ComplexMatrix& H);

// |<psi|phi>|^2
double fidelity(const StateVector& psi, const StateVector& phi);

struct GapPoint {
    double s;
    double e0;
    double e1;
    double gap;
};

std::vector<GapPoint> gap_curve(const ModelSpec& model, const std::vector<double>& s_grid);

}  // namespace adiasweep

#endif
