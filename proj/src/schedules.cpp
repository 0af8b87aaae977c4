#include "adiasweep/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adiasweep {

namespace {

constexpr double kExpArgCap = 700.0;  // exp() overflows just above this

void require_time_in_range(double t, double T, const char* who) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument(std::string(who) + ": T must be positive and finite");
    if (!(t >= 0.0 && t <= T))
        throw std::invalid_argument(std::string(who) + ": t=" + std::to_string(t) +
                                    " outside [0, " + std::to_string(T) + "]");
}

}  // namespace

std::string schedule_name(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::LinearLZ: return "linear-lz";
        case ScheduleKind::QuadraticLZ: return "quadratic-lz";
        case ScheduleKind::LinearS: return "linear";
        case ScheduleKind::QuadraticS: return "quadratic";
        case ScheduleKind::ExpLike: return "exp-like";
    }
    return "?";
}

double Schedule::t_c() const {
    if (kind == ScheduleKind::ExpLike) return s_c * T;
    return 0.5 * T;
}

namespace {

Schedule make_basic(ScheduleKind k, double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("Schedule: T must be positive and finite");
    return Schedule{k, T, 0.0, 0.0};
}

}  // namespace

Schedule make_linear_lz(double T) { return make_basic(ScheduleKind::LinearLZ, T); }
Schedule make_quadratic_lz(double T) { return make_basic(ScheduleKind::QuadraticLZ, T); }
Schedule make_linear_s(double T) { return make_basic(ScheduleKind::LinearS, T); }
Schedule make_quadratic_s(double T) { return make_basic(ScheduleKind::QuadraticS, T); }

Schedule make_exp_like(double T, double alpha, double s_c) {
    Schedule s = make_basic(ScheduleKind::ExpLike, T);
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("Schedule: alpha must be positive and finite");
    if (!(s_c > 0.0 && s_c < 1.0))
        throw std::invalid_argument("Schedule: s_c must lie in (0,1), got " + std::to_string(s_c));
    if (alpha / s_c > kExpArgCap)
        throw std::invalid_argument("Schedule: alpha=" + std::to_string(alpha) +
                                    " overflows exp(alpha/s_c); maximum admissible alpha for s_c=" +
                                    std::to_string(s_c) + " is " + std::to_string(kExpArgCap * s_c));
    s.alpha = alpha;
    s.s_c = s_c;
    return s;
}

double linear_lz(double t, const LZParams& p, double T) {
    validate(p);
    require_time_in_range(t, T, "linear_lz");
    return -p.omega0 + (2.0 * p.omega0 / T) * t;
}

double quadratic_lz(double t, const LZParams& p, double T) {
    validate(p);
    require_time_in_range(t, T, "quadratic_lz");
    const double tc = 0.5 * T;
    const double x = t / tc - 1.0;
    return (t <= tc ? -1.0 : 1.0) * p.omega0 * x * x;
}

double sweep_velocity(double t, const LZParams& p, double T) {
    validate(p);
    require_time_in_range(t, T, "sweep_velocity");
    const double tc = 0.5 * T;
    return (2.0 * p.omega0 / tc) * std::abs(t / tc - 1.0);
}

double linear_s(double t, double T) {
    require_time_in_range(t, T, "linear_s");
    return t / T;
}

double quadratic_s(double t, double T) {
    require_time_in_range(t, T, "quadratic_s");
    const double x = t / T;
    return x * x;
}

double exp_like_s(double t, const Schedule& sched) {
    if (sched.kind != ScheduleKind::ExpLike)
        throw std::invalid_argument("exp_like_s: schedule is not exponential-like");
    require_time_in_range(t, sched.T, "exp_like_s");
    const double a = sched.alpha;
    const double sc = sched.s_c;
    const double tc = sched.t_c();
    // each branch is clamped to its mathematical range; rounding in t/tc
    // can otherwise push the value past s_c or 1 by an ulp
    if (t <= tc) {
        const double s = sc * (1.0 - std::exp(-a * t / tc)) / (1.0 - std::exp(-a));
        return std::clamp(s, 0.0, sc);
    }
    // 1 - (1-sc) (e^{a/sc} - e^{a t/tc}) / (e^{a/sc} - e^{a}); factor e^{a}
    // out so nothing overflows before the cap does
    const double num = std::exp(a / sc - a) - std::exp(a * t / tc - a);
    const double den = std::exp(a / sc - a) - 1.0;
    const double s = 1.0 - (1.0 - sc) * num / den;
    return std::clamp(s, sc, 1.0);
}

double schedule_value(const Schedule& sched, const ModelSpec& model, double t) {
    switch (sched.kind) {
        case ScheduleKind::LinearLZ:
            return linear_lz(t, model.lz(), sched.T);
        case ScheduleKind::QuadraticLZ:
            return quadratic_lz(t, model.lz(), sched.T);
        case ScheduleKind::LinearS:
            return linear_s(t, sched.T);
        case ScheduleKind::QuadraticS:
            return quadratic_s(t, sched.T);
        case ScheduleKind::ExpLike:
            return exp_like_s(t, sched);
    }
    throw std::logic_error("schedule_value: unknown kind");
}

double sc_analytic(const Aqc1Params& p) {
    validate(p);
    const double wx2 = p.omega_x * p.omega_x;
    return wx2 / (wx2 + p.omega_z * p.omega_z);
}

double gap_analytic(const Aqc1Params& p, double s) {
    validate(p);
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("gap_analytic: s outside [0,1]");
    const double a = s * p.omega_z;
    const double b = (1.0 - s) * p.omega_x;
    return 2.0 * std::sqrt(a * a + b * b);
}

double golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

GapMinimum sc_numeric(const std::function<double(double)>& gapfn) {
    const int n = 2001;
    int imin = 0;
    double fmin = gapfn(0.0);
    for (int i = 1; i < n; ++i) {
        const double s = static_cast<double>(i) / (n - 1);
        const double g = gapfn(s);
        if (g < fmin) {
            fmin = g;
            imin = i;
        }
    }
    if (imin == 0 || imin == n - 1) {
        const double s = static_cast<double>(imin) / (n - 1);
        return GapMinimum{s, fmin, true};
    }
    const double lo = static_cast<double>(imin - 1) / (n - 1);
    const double hi = static_cast<double>(imin + 1) / (n - 1);
    const double s_c = golden_min(gapfn, lo, hi, 1e-6);
    return GapMinimum{s_c, gapfn(s_c), false};
}

}  // namespace adiasweep
