#include "adiasweep/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace adiasweep {

namespace {

int thread_cap() {
    if (const char* env = std::getenv("ADIASWEEP_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// runs fn(0..n-1) on up to thread_cap() workers; exceptions are rethrown
void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(n, thread_cap());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n || failed.load()) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

Schedule build_schedule(ScheduleKind kind, double T, double alpha, double s_c) {
    switch (kind) {
        case ScheduleKind::LinearLZ: return make_linear_lz(T);
        case ScheduleKind::QuadraticLZ: return make_quadratic_lz(T);
        case ScheduleKind::LinearS: return make_linear_s(T);
        case ScheduleKind::QuadraticS: return make_quadratic_s(T);
        case ScheduleKind::ExpLike: return make_exp_like(T, alpha, s_c);
    }
    throw std::logic_error("build_schedule: unknown kind");
}

double fidelity_run(const ModelSpec& model, const Schedule& sched, int n_steps) {
    EvolutionSpec spec{model, sched, n_steps, 0};
    return evolve(spec).final_fidelity;
}

}  // namespace

double model_sc(const ModelSpec& model) {
    switch (model.kind()) {
        case ModelSpec::Kind::Aqc1:
            return sc_analytic(model.aqc1());
        case ModelSpec::Kind::Factor21: {
            const GapMinimum gm = sc_numeric([&](double s) {
                const EigenSystem es = eig_hermitian(model.hamiltonian(s));
                return es.values[1] - es.values[0];
            });
            if (gm.boundary)
                throw std::runtime_error("model_sc: gap minimum at interpolation boundary");
            return gm.s_c;
        }
        case ModelSpec::Kind::LZ:
            throw std::invalid_argument("model_sc: LZ sweeps use their own schedule kinds");
    }
    throw std::logic_error("model_sc: unknown kind");
}

std::vector<double> default_alpha_grid() {
    const int n = 40;
    const double lo = std::log(0.05), hi = std::log(20.0);
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = std::exp(lo + (hi - lo) * i / (n - 1));
    return grid;
}

AlphaOptimum optimize_alpha(const ModelSpec& model, double T, const std::vector<double>& alpha_grid,
                            int n_steps) {
    if (alpha_grid.empty()) throw std::invalid_argument("optimize_alpha: empty grid");
    const double s_c = model_sc(model);

    const auto F = [&](double alpha) {
        return fidelity_run(model, make_exp_like(T, alpha, s_c), n_steps);
    };

    double best_alpha = alpha_grid[0];
    double best_f = -1.0;
    int best_i = 0;
    for (int i = 0; i < static_cast<int>(alpha_grid.size()); ++i) {
        const double f = F(alpha_grid[i]);
        if (f > best_f) {
            best_f = f;
            best_alpha = alpha_grid[i];
            best_i = i;
        }
    }

    const int n = static_cast<int>(alpha_grid.size());
    const double lo = alpha_grid[std::max(0, best_i - 1)];
    const double hi = alpha_grid[std::min(n - 1, best_i + 1)];
    if (hi > lo) {
        // golden section tracks the best point it sees; ties keep the
        // smaller alpha
        const double refined = golden_min(
            [&](double a) {
                const double f = F(a);
                if (f > best_f || (f == best_f && a < best_alpha)) {
                    best_f = f;
                    best_alpha = a;
                }
                return -f;
            },
            lo, hi, 1e-3);
        const double fr = F(refined);
        if (fr > best_f || (fr == best_f && refined < best_alpha)) {
            best_f = fr;
            best_alpha = refined;
        }
    }

    const bool boundary =
        std::abs(best_alpha - alpha_grid.front()) <= 1e-3 || std::abs(best_alpha - alpha_grid.back()) <= 1e-3;
    return AlphaOptimum{best_alpha, best_f, boundary};
}

std::vector<FidelityRecord> scan_fidelity(const ScanSpec& spec) {
    if (spec.kinds.empty() || spec.T_values.empty())
        throw std::invalid_argument("scan_fidelity: empty schedule list or T grid");
    for (size_t i = 0; i < spec.T_values.size(); ++i) {
        if (!(spec.T_values[i] > 0.0))
            throw std::invalid_argument("scan_fidelity: T values must be positive");
        if (i > 0 && !(spec.T_values[i] > spec.T_values[i - 1]))
            throw std::invalid_argument("scan_fidelity: T values must be strictly ascending");
    }

    const bool needs_sc =
        std::find(spec.kinds.begin(), spec.kinds.end(), ScheduleKind::ExpLike) != spec.kinds.end();
    const double s_c = needs_sc ? model_sc(spec.model) : 0.0;
    const std::vector<double> alpha_grid =
        spec.alpha_grid.empty() ? default_alpha_grid() : spec.alpha_grid;

    const int n_T = static_cast<int>(spec.T_values.size());
    const int n_tasks = static_cast<int>(spec.kinds.size()) * n_T;
    std::vector<FidelityRecord> records(n_tasks);

    parallel_for(n_tasks, [&](int task) {
        const ScheduleKind kind = spec.kinds[task / n_T];
        const double T = spec.T_values[task % n_T];
        FidelityRecord rec;
        rec.model_id = spec.model.id();
        rec.schedule_id = schedule_name(kind);
        rec.T = T;
        try {
            if (kind == ScheduleKind::ExpLike && spec.optimize_alpha) {
                const AlphaOptimum opt = optimize_alpha(spec.model, T, alpha_grid, spec.n_steps);
                rec.alpha = opt.alpha;
                rec.fidelity = opt.fidelity;
            } else if (kind == ScheduleKind::ExpLike) {
                rec.alpha = spec.fixed_alpha;
                rec.fidelity =
                    fidelity_run(spec.model, make_exp_like(T, spec.fixed_alpha, s_c), spec.n_steps);
            } else {
                rec.fidelity =
                    fidelity_run(spec.model, build_schedule(kind, T, 0.0, 0.0), spec.n_steps);
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("scan_fidelity: schedule=" + rec.schedule_id +
                                     " T=" + std::to_string(T) + ": " + e.what());
        }
        records[task] = std::move(rec);
    });
    return records;
}

std::map<std::string, std::optional<double>> crossing_time(
    const std::vector<FidelityRecord>& records, double F_target) {
    if (records.empty()) throw std::invalid_argument("crossing_time: no records");
    std::map<std::string, std::vector<const FidelityRecord*>> by_schedule;
    for (const auto& r : records) by_schedule[r.schedule_id].push_back(&r);

    std::map<std::string, std::optional<double>> out;
    for (auto& [id, recs] : by_schedule) {
        std::sort(recs.begin(), recs.end(),
                  [](const FidelityRecord* a, const FidelityRecord* b) { return a->T < b->T; });
        std::optional<double> crossing;
        for (size_t i = 0; i < recs.size(); ++i) {
            if (recs[i]->fidelity >= F_target) {
                if (i == 0) {
                    crossing = recs[0]->T;
                } else {
                    const double f0 = recs[i - 1]->fidelity, f1 = recs[i]->fidelity;
                    const double t0 = recs[i - 1]->T, t1 = recs[i]->T;
                    crossing = t0 + (t1 - t0) * (F_target - f0) / (f1 - f0);
                }
                break;
            }
        }
        out[id] = crossing;
    }
    return out;
}

}  // namespace adiasweep
