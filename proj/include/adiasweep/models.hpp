#ifndef ADIASWEEP_MODELS_HPP
#define ADIASWEEP_MODELS_HPP

#include <memory>
#include <string>

#include "adiasweep/hermlin.hpp"

namespace adiasweep {

struct LZParams {
    double omega0;   // sweep amplitude of the diagonal splitting
    double omega_x;  // transverse splitting
};

struct Aqc1Params {
    double omega_x;
    double omega_z;
};

struct Factor21Params {
    double g;  // transverse Zeeman splitting
};

// Rotated LZ frame of the single-qubit interpolation Hamiltonian:
// H = omega_perp sigma_perp + omega_n(s) sigma_n.
struct RotatedFrame {
    double theta;       // atan2(omega_x, omega_z)
    double Omega;       // sqrt(omega_z^2 + omega_x^2)
    double omega_perp;  // omega_x cos(theta)
};

// H = omega_x sigma_x + omega_z(t) sigma_z
ComplexMatrix lz_hamiltonian(const LZParams& p, double omega_z_t);

// H = (1-s) omega_x sigma_x + s omega_z sigma_z, s in [0,1]
ComplexMatrix aqc1_hamiltonian(const Aqc1Params& p, double s);

RotatedFrame rotated_frame(const Aqc1Params& p);

// omega_n(s) = s Omega - omega_x sin(theta); vanishes at the minimal-gap point
double rotated_omega_n(const RotatedFrame& f, double s);

// H0 = g (sigma_1x + sigma_2x + sigma_3x) on 3 spins
ComplexMatrix factor21_h0(const Factor21Params& p);

// Diagonal problem Hamiltonian [21 - (2I - sigma_1z)(4I - sigma_2z - 2 sigma_3z)]^2.
// Bit convention: qubit 1 is the most significant bit, up = bit 0, so the
// unique zero sits at basis index 7 (all spins down, read as 3 x 7 = 21).
ComplexMatrix factor21_hp();

// (1-s) H0 + s HP
ComplexMatrix factor21_hamiltonian(const Factor21Params& p, double s);

void validate(const LZParams& p);
void validate(const Aqc1Params& p);
void validate(const Factor21Params& p);

// Tagged model family. hamiltonian() takes the swept parameter directly
// (omega_z for LZ, s in [0,1] otherwise); hamiltonian_at_s() maps a
// normalized s onto the LZ window [-omega0, omega0] so gap curves share
// one axis.
class ModelSpec {
public:
    enum class Kind { LZ, Aqc1, Factor21 };

    static ModelSpec make_lz(double omega0, double omega_x);
    static ModelSpec make_aqc1(double omega_x, double omega_z);
    static ModelSpec make_factor21(double g);

    Kind kind() const { return kind_; }
    int dim() const { return kind_ == Kind::Factor21 ? 8 : 2; }
    std::string id() const;

    const LZParams& lz() const;
    const Aqc1Params& aqc1() const;
    const Factor21Params& factor21() const;

    ComplexMatrix hamiltonian(double u) const;
    ComplexMatrix hamiltonian_at_s(double s) const;

private:
    ModelSpec() = default;
    Kind kind_{Kind::LZ};
    LZParams lz_{0, 0};
    Aqc1Params aqc1_{0, 0};
    Factor21Params f21_{0};
    // cached 8x8 pieces for the factorization model
    std::shared_ptr<const ComplexMatrix> h0_, hp_;
};

}  // namespace adiasweep

#endif
