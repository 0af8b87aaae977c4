#ifndef ADIASWEEP_SCHEDULES_HPP
#define ADIASWEEP_SCHEDULES_HPP

#include <functional>
#include <string>

#include "adiasweep/models.hpp"

namespace adiasweep {

enum class ScheduleKind { LinearLZ, QuadraticLZ, LinearS, QuadraticS, ExpLike };

std::string schedule_name(ScheduleKind k);

// Sweep schedule over [0, T]. For the exponential-like kind the knee is
// pinned to t_c = s_c * T; for the quadratic LZ kind t_c = T/2.
struct Schedule {
    ScheduleKind kind;
    double T;
    double alpha = 0.0;  // ExpLike only
    double s_c = 0.0;    // ExpLike only

    double t_c() const;
};

Schedule make_linear_lz(double T);
Schedule make_quadratic_lz(double T);
Schedule make_linear_s(double T);
Schedule make_quadratic_s(double T);
// Rejects alpha/s_c > 700 (exp(alpha/s_c) appears explicitly).
Schedule make_exp_like(double T, double alpha, double s_c);

// omega_z(t) = -omega0 + (2 omega0 / T) t
double linear_lz(double t, const LZParams& p, double T);

// two-branch parabola through (-omega0, 0, +omega0) with vertex at t_c = T/2
double quadratic_lz(double t, const LZParams& p, double T);

// |d omega_z / dt| of the quadratic sweep: (2 omega0 / t_c) |t/t_c - 1|
double sweep_velocity(double t, const LZParams& p, double T);

double linear_s(double t, double T);
double quadratic_s(double t, double T);
double exp_like_s(double t, const Schedule& sched);

// Swept parameter at time t: omega_z for LZ kinds, s otherwise.
double schedule_value(const Schedule& sched, const ModelSpec& model, double t);

// s_c = omega_x^2 / (omega_x^2 + omega_z^2)
double sc_analytic(const Aqc1Params& p);

// Delta(s) = 2 sqrt(s^2 omega_z^2 + (1-s)^2 omega_x^2)
double gap_analytic(const Aqc1Params& p, double s);

struct GapMinimum {
    double s_c;
    double gap_min;
    bool boundary;  // true when the scan minimum sits at s=0 or s=1
};

// Coarse 2001-point scan on [0,1] followed by golden-section refinement
// to an interval of width 1e-6.
GapMinimum sc_numeric(const std::function<double(double)>& gapfn);

// Golden-section minimizer on [a, b]; returns the midpoint of the final
// bracket once it shrinks below tol.
double golden_min(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace adiasweep

#endif
