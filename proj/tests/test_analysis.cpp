#include <cmath>
#include <cstdlib>

#include "adiasweep/analysis.hpp"
#include "doctest.h"

using namespace adiasweep;

TEST_CASE("model_sc: closed form for AQC1, numeric dip for factor21") {
    CHECK(model_sc(ModelSpec::make_aqc1(18.0, 30.0)) ==
          doctest::Approx(324.0 / 1224.0).epsilon(1e-12));
    const double sc21 = model_sc(ModelSpec::make_factor21(30.0));
    CHECK(sc21 > 0.70);
    CHECK(sc21 < 0.78);
    CHECK_THROWS_AS(model_sc(ModelSpec::make_lz(10.0, 1.0)), std::invalid_argument);
}

TEST_CASE("default_alpha_grid is 40 log-spaced points on [0.05, 20]") {
    const auto grid = default_alpha_grid();
    REQUIRE(grid.size() == 40);
    CHECK(grid.front() == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(grid.back() == doctest::Approx(20.0).epsilon(1e-12));
    const double ratio = grid[1] / grid[0];
    for (size_t i = 1; i < grid.size(); ++i) {
        REQUIRE(grid[i] > grid[i - 1]);
        REQUIRE(grid[i] / grid[i - 1] == doctest::Approx(ratio).epsilon(1e-10));
    }
}

TEST_CASE("optimize_alpha never returns less than the best grid value") {
    const ModelSpec model = ModelSpec::make_aqc1(18.0, 30.0);
    const std::vector<double> grid = {0.2, 0.6, 1.8, 5.4};
    const int n_steps = 800;
    const AlphaOptimum opt = optimize_alpha(model, 0.3, grid, n_steps);

    const double s_c = model_sc(model);
    double best_grid_f = -1.0;
    for (double a : grid) {
        const EvolutionSpec spec{model, make_exp_like(0.3, a, s_c), n_steps, 0};
        best_grid_f = std::max(best_grid_f, evolve(spec).final_fidelity);
    }
    CHECK(opt.fidelity >= best_grid_f);

    // the reported alpha reproduces the reported fidelity
    const EvolutionSpec at_best{model, make_exp_like(0.3, opt.alpha, s_c), n_steps, 0};
    CHECK(evolve(at_best).final_fidelity == doctest::Approx(opt.fidelity).epsilon(1e-12));
}

TEST_CASE("optimize_alpha flags a boundary optimum") {
    const ModelSpec model = ModelSpec::make_aqc1(18.0, 30.0);
    // at very short T the optimum runs into the top of this truncated grid
    const AlphaOptimum opt = optimize_alpha(model, 0.05, {8.0, 12.0, 18.0}, 400);
    CHECK(opt.at_grid_boundary);
    CHECK(opt.alpha == doctest::Approx(18.0));
    CHECK_THROWS_AS(optimize_alpha(model, 0.3, {}, 400), std::invalid_argument);
}

TEST_CASE("scan_fidelity orders records by schedule list then T") {
    ScanSpec spec{.model = ModelSpec::make_aqc1(18.0, 30.0),
                  .kinds = {ScheduleKind::QuadraticS, ScheduleKind::LinearS},
                  .T_values = {0.01, 0.05, 0.2},
                  .n_steps = 400};
    const auto records = scan_fidelity(spec);
    REQUIRE(records.size() == 6);
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        CHECK(r.model_id == "aqc1");
        CHECK(r.schedule_id == (i < 3 ? "quadratic" : "linear"));
        CHECK(r.T == doctest::Approx(spec.T_values[i % 3]));
        CHECK(!r.alpha.has_value());
        CHECK(r.fidelity >= 0.0);
        CHECK(r.fidelity <= 1.0 + 1e-12);
    }
}

TEST_CASE("scan_fidelity carries alpha on exp-like rows") {
    ScanSpec spec{.model = ModelSpec::make_aqc1(18.0, 30.0),
                  .kinds = {ScheduleKind::ExpLike},
                  .T_values = {0.1},
                  .fixed_alpha = 2.5,
                  .n_steps = 400};
    const auto records = scan_fidelity(spec);
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].alpha.has_value());
    CHECK(*records[0].alpha == doctest::Approx(2.5));

    spec.optimize_alpha = true;
    spec.alpha_grid = {0.5, 1.5, 4.0};
    const auto optimized = scan_fidelity(spec);
    REQUIRE(optimized.size() == 1);
    REQUIRE(optimized[0].alpha.has_value());
    CHECK(optimized[0].fidelity >= records[0].fidelity - 1e-12);
}

TEST_CASE("scan_fidelity is deterministic across thread counts") {
    ScanSpec spec{.model = ModelSpec::make_factor21(30.0),
                  .kinds = {ScheduleKind::LinearS, ScheduleKind::QuadraticS},
                  .T_values = {0.005, 0.01, 0.02},
                  .n_steps = 300};

    setenv("ADIASWEEP_THREADS", "1", 1);
    const auto serial = scan_fidelity(spec);
    setenv("ADIASWEEP_THREADS", "4", 1);
    const auto threaded = scan_fidelity(spec);
    unsetenv("ADIASWEEP_THREADS");

    REQUIRE(serial.size() == threaded.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].schedule_id == threaded[i].schedule_id);
        CHECK(serial[i].T == threaded[i].T);
        CHECK(serial[i].fidelity == threaded[i].fidelity);
    }
}

TEST_CASE("scan_fidelity validates its inputs") {
    ScanSpec spec{.model = ModelSpec::make_aqc1(18.0, 30.0),
                  .kinds = {ScheduleKind::LinearS},
                  .T_values = {}};
    CHECK_THROWS_AS(scan_fidelity(spec), std::invalid_argument);
    spec.T_values = {0.2, 0.1};
    CHECK_THROWS_AS(scan_fidelity(spec), std::invalid_argument);
    spec.T_values = {-1.0, 0.1};
    CHECK_THROWS_AS(scan_fidelity(spec), std::invalid_argument);
    spec.T_values = {0.1};
    spec.kinds = {};
    CHECK_THROWS_AS(scan_fidelity(spec), std::invalid_argument);
}

namespace {

FidelityRecord rec(const std::string& sched, double T, double f) {
    return FidelityRecord{"m", sched, T, std::nullopt, f};
}

}  // namespace

TEST_CASE("crossing_time interpolates between bracketing grid points") {
    const std::vector<FidelityRecord> records = {rec("linear", 1.0, 0.2), rec("linear", 2.0, 0.8)};
    const auto out = crossing_time(records, 0.5);
    REQUIRE(out.count("linear") == 1);
    REQUIRE(out.at("linear").has_value());
    CHECK(*out.at("linear") == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("crossing_time edge cases") {
    // target never reached
    const auto none = crossing_time({rec("linear", 1.0, 0.2), rec("linear", 2.0, 0.4)}, 0.9);
    CHECK(!none.at("linear").has_value());

    // first grid point already above the target
    const auto first = crossing_time({rec("linear", 1.0, 0.95), rec("linear", 2.0, 0.99)}, 0.9);
    REQUIRE(first.at("linear").has_value());
    CHECK(*first.at("linear") == doctest::Approx(1.0));

    // schedules are resolved independently, and unsorted input is tolerated
    const auto two = crossing_time({rec("quadratic", 3.0, 0.9), rec("quadratic", 1.0, 0.1),
                                    rec("linear", 1.0, 0.5), rec("linear", 3.0, 0.7)},
                                   0.5);
    REQUIRE(two.at("quadratic").has_value());
    CHECK(*two.at("quadratic") == doctest::Approx(2.0));
    CHECK(*two.at("linear") == doctest::Approx(1.0));

    CHECK_THROWS_AS(crossing_time({}, 0.5), std::invalid_argument);
}
