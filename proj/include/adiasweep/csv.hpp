#ifndef ADIASWEEP_CSV_HPP
#define ADIASWEEP_CSV_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adiasweep/analysis.hpp"

namespace adiasweep {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// %.12g, the fixed serialization for every CSV column
std::string fmt_g12(double x);

// Throws IoError when the path cannot be opened for writing.
std::ofstream open_csv(const std::string& path);

void write_gap_csv(std::ostream& os, const std::vector<GapPoint>& curve, double s_c,
                   double gap_min);
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_scan_csv(std::ostream& os, const std::vector<FidelityRecord>& records);
void write_optimize_csv(std::ostream& os, const std::vector<double>& T_values,
                        const std::vector<AlphaOptimum>& optima);

// Parses a scan CSV back into records ("#" lines and the header skipped).
std::vector<FidelityRecord> read_scan_csv(std::istream& is);

}  // namespace adiasweep

#endif
