// adiasweep command line tool: gap scans, single evolutions, fidelity-vs-T
// scans and alpha optimization, all emitted as CSV.
//
// Exit codes: 0 success, 1 bad arguments or unwritable output, 2 numerical
// failure.

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adiasweep.h"

namespace {

struct ModelOptions {
    std::string model = "lz";
    double w0 = 10.0;
    double wx = -1.0;  // default depends on the model
    double wz = 30.0;
    double g = 30.0;
};

void add_model_options(CLI::App* cmd, ModelOptions& opt) {
    cmd->add_option("--model", opt.model, "Model: lz, aqc1 or factor21")
        ->check(CLI::IsMember({"lz", "aqc1", "factor21"}));
    cmd->add_option("--w0", opt.w0, "LZ sweep amplitude omega_0 (default 10)");
    cmd->add_option("--wx", opt.wx, "Transverse splitting omega_x (default 1 for lz, 18 for aqc1)");
    cmd->add_option("--wz", opt.wz, "Longitudinal splitting omega_z (default 30)");
    cmd->add_option("--g", opt.g, "Transverse Zeeman splitting g (default 30)");
}

using ModelHandle = std::unique_ptr<adia_model, decltype(&adia_model_free)>;

ModelHandle build_model(const ModelOptions& opt) {
    adia_model* m = nullptr;
    if (opt.model == "lz") {
        m = adia_model_lz(opt.w0, opt.wx < 0 ? 1.0 : opt.wx);
    } else if (opt.model == "aqc1") {
        m = adia_model_aqc1(opt.wx < 0 ? 18.0 : opt.wx, opt.wz);
    } else {
        m = adia_model_factor21(opt.g);
    }
    if (!m) {
        std::fprintf(stderr, "error: %s\n", adia_last_error());
        std::exit(1);
    }
    return ModelHandle(m, &adia_model_free);
}

adia_schedule_kind parse_schedule(const std::string& name) {
    if (name == "linear-lz") return ADIA_SCHED_LINEAR_LZ;
    if (name == "quadratic-lz") return ADIA_SCHED_QUADRATIC_LZ;
    if (name == "linear") return ADIA_SCHED_LINEAR;
    if (name == "quadratic") return ADIA_SCHED_QUADRATIC;
    if (name == "exp-like") return ADIA_SCHED_EXP_LIKE;
    std::fprintf(stderr, "error: unknown schedule '%s'\n", name.c_str());
    std::exit(1);
}

// "start:stop:count" -> count points, linearly or log spaced
std::vector<double> parse_grid(const std::string& text, bool log_spaced, const char* flag) {
    double start = 0, stop = 0;
    int count = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &start, &stop, &count) != 3 || count < 1 ||
        !(stop >= start) || (log_spaced && !(start > 0))) {
        std::fprintf(stderr, "error: %s expects start:stop:count, got '%s'\n", flag, text.c_str());
        std::exit(1);
    }
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = start;
        return grid;
    }
    for (int i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        grid[i] = log_spaced ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                             : start + f * (stop - start);
    }
    return grid;
}

int finish(adia_status st) {
    if (st == ADIA_OK) return 0;
    std::fprintf(stderr, "error: %s\n", adia_last_error());
    return st == ADIA_ERR_NUMERICAL ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adiabatic parameter-sweep simulator and schedule optimizer"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "INI config file; put options in a [subcommand] section");

    ModelOptions gap_model, evolve_model, scan_model, opt_model;

    // gap
    auto* gap = app.add_subcommand("gap", "Instantaneous spectrum and gap over the sweep");
    int gap_points = 2001;
    std::string gap_out;
    add_model_options(gap, gap_model);
    gap->add_option("--points", gap_points, "Number of s grid points");
    gap->add_option("--out", gap_out, "Output CSV path")->required();
    gap->fallthrough();

    // evolve
    auto* ev = app.add_subcommand("evolve", "Single time evolution; prints the final fidelity");
    std::string ev_schedule = "linear", ev_out;
    double ev_T = 1.0, ev_alpha = 1.0;
    int ev_steps = 0, ev_record = -1;
    add_model_options(ev, evolve_model);
    ev->add_option("--schedule", ev_schedule,
                   "Schedule: linear-lz, quadratic-lz, linear, quadratic or exp-like");
    ev->add_option("--T", ev_T, "Total evolution time")->required();
    ev->add_option("--alpha", ev_alpha, "Exponential-like curvature parameter");
    ev->add_option("--n-steps", ev_steps, "Time steps (default 40000)");
    ev->add_option("--record-every", ev_record,
                   "Record every k-th step (default n_steps/200, 0 = final only)");
    ev->add_option("--out", ev_out, "Trajectory CSV path")->required();
    ev->fallthrough();

    // scan
    auto* scan = app.add_subcommand("scan", "Fidelity versus total evolution time");
    std::string scan_schedule, scan_tgrid, scan_agrid, scan_out;
    double scan_alpha = 1.0;
    int scan_steps = 0;
    bool scan_opt = false;
    add_model_options(scan, scan_model);
    scan->add_option("--schedule", scan_schedule,
                     "Restrict to one schedule (default: all for the model)");
    scan->add_option("--T-grid", scan_tgrid, "T grid as start:stop:count")->required();
    scan->add_option("--alpha", scan_alpha, "Fixed alpha for exp-like rows");
    scan->add_option("--alpha-grid", scan_agrid, "Log-spaced alpha grid start:stop:count");
    scan->add_flag("--optimize-alpha", scan_opt, "Optimize alpha per T for exp-like rows");
    scan->add_option("--n-steps", scan_steps, "Time steps (default 40000)");
    scan->add_option("--out", scan_out, "Output CSV path")->required();
    scan->fallthrough();

    // optimize-alpha
    auto* oa = app.add_subcommand("optimize-alpha", "Best exp-like alpha per evolution time");
    std::string oa_tgrid, oa_agrid, oa_out;
    int oa_steps = 0;
    add_model_options(oa, opt_model);
    oa->add_option("--T-grid", oa_tgrid, "T grid as start:stop:count")->required();
    oa->add_option("--alpha-grid", oa_agrid, "Log-spaced alpha grid start:stop:count");
    oa->add_option("--n-steps", oa_steps, "Time steps (default 40000)");
    oa->add_option("--out", oa_out, "Output CSV path")->required();
    oa->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (gap->parsed()) {
        auto model = build_model(gap_model);
        return finish(adia_gap_scan_csv(model.get(), gap_points, gap_out.c_str()));
    }

    if (ev->parsed()) {
        auto model = build_model(evolve_model);
        const int n_steps = ev_steps <= 0 ? 40000 : ev_steps;
        if (ev_record < 0) ev_record = n_steps / 200;
        double fidelity = 0.0;
        const adia_status st =
            adia_evolve_csv(model.get(), parse_schedule(ev_schedule), ev_alpha, ev_T, n_steps,
                            ev_record, ev_out.c_str(), &fidelity);
        if (st == ADIA_OK) std::printf("F=%.12g\n", fidelity);
        return finish(st);
    }

    if (scan->parsed()) {
        auto model = build_model(scan_model);
        std::vector<adia_schedule_kind> kinds;
        if (!scan_schedule.empty()) {
            kinds.push_back(parse_schedule(scan_schedule));
        } else if (scan_model.model == "lz") {
            kinds = {ADIA_SCHED_LINEAR_LZ, ADIA_SCHED_QUADRATIC_LZ};
        } else {
            kinds = {ADIA_SCHED_LINEAR, ADIA_SCHED_QUADRATIC, ADIA_SCHED_EXP_LIKE};
        }
        const auto T_grid = parse_grid(scan_tgrid, false, "--T-grid");
        std::vector<double> alpha_grid;
        if (!scan_agrid.empty()) alpha_grid = parse_grid(scan_agrid, true, "--alpha-grid");
        return finish(adia_scan_csv(model.get(), kinds.data(), static_cast<int>(kinds.size()),
                                    T_grid.data(), static_cast<int>(T_grid.size()), scan_alpha,
                                    scan_opt ? 1 : 0,
                                    alpha_grid.empty() ? nullptr : alpha_grid.data(),
                                    static_cast<int>(alpha_grid.size()), scan_steps, scan_out.c_str()));
    }

    if (oa->parsed()) {
        auto model = build_model(opt_model);
        const auto T_grid = parse_grid(oa_tgrid, false, "--T-grid");
        std::vector<double> alpha_grid;
        if (!oa_agrid.empty()) alpha_grid = parse_grid(oa_agrid, true, "--alpha-grid");
        return finish(adia_optimize_alpha_csv(model.get(), T_grid.data(),
                                              static_cast<int>(T_grid.size()),
                                              alpha_grid.empty() ? nullptr : alpha_grid.data(),
                                              static_cast<int>(alpha_grid.size()), oa_steps,
                                              oa_out.c_str()));
    }
    return 1;
}
