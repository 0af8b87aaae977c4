#include "adiasweep/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace adiasweep {

std::string fmt_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream os(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!os) throw IoError("cannot open output file: " + path);
    return os;
}

void write_gap_csv(std::ostream& os, const std::vector<GapPoint>& curve, double s_c,
                   double gap_min) {
    os << "s,e0,e1,gap\n";
    for (const auto& p : curve)
        os << fmt_g12(p.s) << ',' << fmt_g12(p.e0) << ',' << fmt_g12(p.e1) << ','
           << fmt_g12(p.gap) << '\n';
    os << "# s_c=" << fmt_g12(s_c) << " gap_min=" << fmt_g12(gap_min) << '\n';
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,s_or_wz,fidelity_to_instantaneous_ground,norm\n";
    for (const auto& p : traj.samples)
        os << fmt_g12(p.t) << ',' << fmt_g12(p.u) << ',' << fmt_g12(p.fidelity_ground) << ','
           << fmt_g12(p.norm) << '\n';
}

void write_scan_csv(std::ostream& os, const std::vector<FidelityRecord>& records) {
    os << "model,schedule,T,alpha,fidelity\n";
    for (const auto& r : records) {
        os << r.model_id << ',' << r.schedule_id << ',' << fmt_g12(r.T) << ',';
        if (r.alpha) os << fmt_g12(*r.alpha);
        os << ',' << fmt_g12(r.fidelity) << '\n';
    }
}

void write_optimize_csv(std::ostream& os, const std::vector<double>& T_values,
                        const std::vector<AlphaOptimum>& optima) {
    os << "T,alpha_best,fidelity_best\n";
    for (size_t i = 0; i < optima.size(); ++i) {
        os << fmt_g12(T_values[i]) << ',' << fmt_g12(optima[i].alpha) << ','
           << fmt_g12(optima[i].fidelity) << '\n';
        if (optima[i].at_grid_boundary)
            os << "# boundary T=" << fmt_g12(T_values[i])
               << " alpha_best=" << fmt_g12(optima[i].alpha) << '\n';
    }
}

std::vector<FidelityRecord> read_scan_csv(std::istream& is) {
    std::vector<FidelityRecord> out;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::stringstream ss(line);
        FidelityRecord r;
        std::string field;
        std::getline(ss, r.model_id, ',');
        std::getline(ss, r.schedule_id, ',');
        std::getline(ss, field, ',');
        r.T = std::stod(field);
        std::getline(ss, field, ',');
        if (!field.empty()) r.alpha = std::stod(field);
        std::getline(ss, field, ',');
        r.fidelity = std::stod(field);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace adiasweep
