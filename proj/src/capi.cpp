#include "adiasweep.h"

#include <string>

#include "adiasweep/analysis.hpp"
#include "adiasweep/csv.hpp"

using namespace adiasweep;

struct adia_model {
    ModelSpec spec;
};

namespace {

thread_local std::string g_last_error = "no error";

adia_status fail(adia_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
adia_status guarded(Fn&& fn) {
    try {
        fn();
        return ADIA_OK;
    } catch (const IoError& e) {
        return fail(ADIA_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ADIA_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ADIA_ERR_NUMERICAL, e.what());
    }
}

ScheduleKind to_kind(adia_schedule_kind k) {
    switch (k) {
        case ADIA_SCHED_LINEAR_LZ: return ScheduleKind::LinearLZ;
        case ADIA_SCHED_QUADRATIC_LZ: return ScheduleKind::QuadraticLZ;
        case ADIA_SCHED_LINEAR: return ScheduleKind::LinearS;
        case ADIA_SCHED_QUADRATIC: return ScheduleKind::QuadraticS;
        case ADIA_SCHED_EXP_LIKE: return ScheduleKind::ExpLike;
    }
    throw std::invalid_argument("unknown schedule kind " + std::to_string(static_cast<int>(k)));
}

Schedule make_run_schedule(const ModelSpec& model, ScheduleKind kind, double T, double alpha) {
    switch (kind) {
        case ScheduleKind::LinearLZ: return make_linear_lz(T);
        case ScheduleKind::QuadraticLZ: return make_quadratic_lz(T);
        case ScheduleKind::LinearS: return make_linear_s(T);
        case ScheduleKind::QuadraticS: return make_quadratic_s(T);
        case ScheduleKind::ExpLike: return make_exp_like(T, alpha, model_sc(model));
    }
    throw std::invalid_argument("unknown schedule kind");
}

int steps_or_default(int n_steps) { return n_steps <= 0 ? kDefaultSteps : n_steps; }

const ModelSpec& require_model(const adia_model* m) {
    if (!m) throw std::invalid_argument("model handle is NULL");
    return m->spec;
}

std::vector<double> grid_or_default(const double* alpha_grid, int n_alpha) {
    if (!alpha_grid || n_alpha <= 0) return default_alpha_grid();
    return std::vector<double>(alpha_grid, alpha_grid + n_alpha);
}

adia_model* make_model(ModelSpec (*ctor)(double, double), double a, double b) {
    try {
        return new adia_model{ctor(a, b)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

}  // namespace

extern "C" {

const char* adia_last_error(void) { return g_last_error.c_str(); }

adia_model* adia_model_lz(double omega0, double omega_x) {
    return make_model(&ModelSpec::make_lz, omega0, omega_x);
}

adia_model* adia_model_aqc1(double omega_x, double omega_z) {
    return make_model(&ModelSpec::make_aqc1, omega_x, omega_z);
}

adia_model* adia_model_factor21(double g) {
    try {
        return new adia_model{ModelSpec::make_factor21(g)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void adia_model_free(adia_model* model) { delete model; }

adia_status adia_minimal_gap(const adia_model* model, double* s_c, double* gap_min) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (!s_c || !gap_min) throw std::invalid_argument("s_c/gap_min must not be NULL");
        const GapMinimum gm = sc_numeric([&](double s) {
            const EigenSystem es = eig_hermitian(spec.hamiltonian_at_s(s));
            return es.values[1] - es.values[0];
        });
        *s_c = gm.s_c;
        *gap_min = gm.gap_min;
    });
}

adia_status adia_gap_scan_csv(const adia_model* model, int points, const char* path) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (points < 2) throw std::invalid_argument("points must be at least 2");
        if (!path) throw std::invalid_argument("path must not be NULL");
        std::vector<double> grid(points);
        for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
        const auto curve = gap_curve(spec, grid);
        const GapMinimum gm = sc_numeric([&](double s) {
            const EigenSystem es = eig_hermitian(spec.hamiltonian_at_s(s));
            return es.values[1] - es.values[0];
        });
        auto os = open_csv(path);
        write_gap_csv(os, curve, gm.s_c, gm.gap_min);
    });
}

adia_status adia_evolve_fidelity(const adia_model* model, adia_schedule_kind kind, double alpha,
                                 double T, int n_steps, double* fidelity_out) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (!fidelity_out) throw std::invalid_argument("fidelity_out must not be NULL");
        EvolutionSpec ev{spec, make_run_schedule(spec, to_kind(kind), T, alpha),
                         steps_or_default(n_steps), 0};
        *fidelity_out = evolve(ev).final_fidelity;
    });
}

adia_status adia_evolve_csv(const adia_model* model, adia_schedule_kind kind, double alpha,
                            double T, int n_steps, int record_every, const char* path,
                            double* fidelity_out) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (!path) throw std::invalid_argument("path must not be NULL");
        EvolutionSpec ev{spec, make_run_schedule(spec, to_kind(kind), T, alpha),
                         steps_or_default(n_steps), record_every};
        const Trajectory traj = evolve(ev);
        auto os = open_csv(path);
        write_trajectory_csv(os, traj);
        if (fidelity_out) *fidelity_out = traj.final_fidelity;
    });
}

adia_status adia_scan_csv(const adia_model* model, const adia_schedule_kind* kinds, int n_kinds,
                          const double* T_values, int n_T, double fixed_alpha, int optimize,
                          const double* alpha_grid, int n_alpha, int n_steps, const char* path) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (!kinds || n_kinds <= 0) throw std::invalid_argument("empty schedule list");
        if (!T_values || n_T <= 0) throw std::invalid_argument("empty T grid");
        if (!path) throw std::invalid_argument("path must not be NULL");
        ScanSpec scan{spec, {}, std::vector<double>(T_values, T_values + n_T),
                      fixed_alpha, grid_or_default(alpha_grid, n_alpha), optimize != 0,
                      steps_or_default(n_steps)};
        for (int i = 0; i < n_kinds; ++i) scan.kinds.push_back(to_kind(kinds[i]));
        const auto records = scan_fidelity(scan);
        auto os = open_csv(path);
        write_scan_csv(os, records);
    });
}

adia_status adia_optimize_alpha(const adia_model* model, double T, const double* alpha_grid,
                                int n_alpha, int n_steps, double* alpha_best, double* f_best) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (!alpha_best || !f_best)
            throw std::invalid_argument("alpha_best/f_best must not be NULL");
        const AlphaOptimum opt =
            optimize_alpha(spec, T, grid_or_default(alpha_grid, n_alpha), steps_or_default(n_steps));
        *alpha_best = opt.alpha;
        *f_best = opt.fidelity;
    });
}

adia_status adia_optimize_alpha_csv(const adia_model* model, const double* T_values, int n_T,
                                    const double* alpha_grid, int n_alpha, int n_steps,
                                    const char* path) {
    return guarded([&] {
        const ModelSpec& spec = require_model(model);
        if (!T_values || n_T <= 0) throw std::invalid_argument("empty T grid");
        if (!path) throw std::invalid_argument("path must not be NULL");
        const auto grid = grid_or_default(alpha_grid, n_alpha);
        std::vector<double> Ts(T_values, T_values + n_T);
        std::vector<AlphaOptimum> optima;
        optima.reserve(Ts.size());
        for (double T : Ts)
            optima.push_back(optimize_alpha(spec, T, grid, steps_or_default(n_steps)));
        auto os = open_csv(path);
        write_optimize_csv(os, Ts, optima);
    });
}

}  // extern "C"
