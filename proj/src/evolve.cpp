#include "adiasweep/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace adiasweep {

StateVector ground_state(const ComplexMatrix& H) {
    const EigenSystem es = eig_hermitian(H);
    const int n = H.dim();
    if (n > 1 && es.values[1] - es.values[0] < 1e-9)
        throw std::runtime_error("ground_state: degenerate ground level (gap " +
                                 std::to_string(es.values[1] - es.values[0]) + ")");
    StateVector psi(n);
    for (int i = 0; i < n; ++i) psi.amp[i] = es.vectors(i, 0);
    return psi;
}

double fidelity(const StateVector& psi, const StateVector& phi) {
    return std::norm(inner(psi, phi));
}

Trajectory evolve(const EvolutionSpec& spec) {
    if (spec.n_steps < kMinSteps)
        throw std::invalid_argument("evolve: n_steps must be at least " +
                                    std::to_string(kMinSteps));
    if (spec.record_every < 0)
        throw std::invalid_argument("evolve: record_every must be non-negative");

    const double T = spec.schedule.T;
    const int n_steps = spec.n_steps;
    const double dt = T / n_steps;

    const auto value_at = [&](double t) {
        const double u = schedule_value(spec.schedule, spec.model, t);
        if (!std::isfinite(u)) throw std::runtime_error("evolve: non-finite schedule value");
        return u;
    };

    StateVector psi = ground_state(spec.model.hamiltonian(value_at(0.0)));
    const StateVector target = ground_state(spec.model.hamiltonian(value_at(T)));

    Trajectory traj;
    const auto record = [&](int step) {
        const double t = std::min(step * dt, T);
        const double u = value_at(t);
        const StateVector g = ground_state(spec.model.hamiltonian(u));
        traj.samples.push_back(TrajectoryPoint{t, u, fidelity(psi, g), psi.norm()});
    };

    if (spec.record_every > 0) record(0);

    for (int k = 0; k < n_steps; ++k) {
        const double t_mid = (k + 0.5) * dt;
        const ComplexMatrix h = spec.model.hamiltonian(value_at(t_mid));
        const EigenSystem es = eig_hermitian(h);
        propagate_in_place(es, dt, psi);
        if (spec.record_every > 0 && ((k + 1) % spec.record_every == 0 || k + 1 == n_steps))
            record(k + 1);
    }

    const double n = psi.norm();
    if (std::abs(n - 1.0) > 1e-10)
        throw std::runtime_error("evolve: norm drifted to " + std::to_string(n));

    traj.final_state = psi;
    traj.final_fidelity = fidelity(psi, target);
    return traj;
}

std::vector<GapPoint> gap_curve(const ModelSpec& model, const std::vector<double>& s_grid) {
    std::vector<GapPoint> out;
    out.reserve(s_grid.size());
    for (double s : s_grid) {
        const EigenSystem es = eig_hermitian(model.hamiltonian_at_s(s));
        out.push_back(GapPoint{s, es.values[0], es.values[1], es.values[1] - es.values[0]});
    }
    return out;
}

}  // namespace adiasweep
