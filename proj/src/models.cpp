#include "adiasweep/models.hpp"

#include <cmath>
#include <stdexcept>

namespace adiasweep {

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

void require_unit_interval(double s, const char* who) {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument(std::string(who) + ": s must lie in [0,1], got " +
                                    std::to_string(s));
}

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument(std::string(name) + " must be positive and finite, got " +
                                    std::to_string(x));
}

}  // namespace

void validate(const LZParams& p) {
    require_positive(p.omega0, "omega0");
    require_positive(p.omega_x, "omega_x");
}

void validate(const Aqc1Params& p) {
    require_positive(p.omega_x, "omega_x");
    require_positive(p.omega_z, "omega_z");
}

void validate(const Factor21Params& p) {
    require_positive(p.g, "g");
}

ComplexMatrix lz_hamiltonian(const LZParams& p, double omega_z_t) {
    validate(p);
    if (!std::isfinite(omega_z_t))
        throw std::invalid_argument("lz_hamiltonian: omega_z(t) must be finite");
    ComplexMatrix h(2);
    h(0, 0) = omega_z_t;
    h(1, 1) = -omega_z_t;
    h(0, 1) = p.omega_x;
    h(1, 0) = p.omega_x;
    return h;
}

ComplexMatrix aqc1_hamiltonian(const Aqc1Params& p, double s) {
    validate(p);
    require_unit_interval(s, "aqc1_hamiltonian");
    ComplexMatrix h(2);
    h(0, 0) = s * p.omega_z;
    h(1, 1) = -s * p.omega_z;
    h(0, 1) = (1.0 - s) * p.omega_x;
    h(1, 0) = (1.0 - s) * p.omega_x;
    return h;
}

RotatedFrame rotated_frame(const Aqc1Params& p) {
    validate(p);
    RotatedFrame f;
    f.theta = std::atan2(p.omega_x, p.omega_z);
    f.Omega = std::hypot(p.omega_x, p.omega_z);
    f.omega_perp = p.omega_x * std::cos(f.theta);
    return f;
}

double rotated_omega_n(const RotatedFrame& f, double s) {
    require_unit_interval(s, "rotated_omega_n");
    const double sin_t = std::sin(f.theta);
    return s * f.Omega - f.Omega * sin_t * sin_t;  // omega_x = Omega sin(theta)
}

ComplexMatrix factor21_h0(const Factor21Params& p) {
    validate(p);
    const ComplexMatrix sx = pauli_x();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix h(8);
    const ComplexMatrix t1 = kron(kron(sx, id), id);
    const ComplexMatrix t2 = kron(kron(id, sx), id);
    const ComplexMatrix t3 = kron(kron(id, id), sx);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            h(i, j) = p.g * (t1(i, j) + t2(i, j) + t3(i, j));
    return h;
}

ComplexMatrix factor21_hp() {
    ComplexMatrix h(8);
    for (int idx = 0; idx < 8; ++idx) {
        // bit 0 means spin up (sigma_z eigenvalue +1); qubit 1 is the MSB
        const int z1 = (idx & 4) ? -1 : 1;
        const int z2 = (idx & 2) ? -1 : 1;
        const int z3 = (idx & 1) ? -1 : 1;
        const int a = 2 - z1;
        const int b = 4 - z2 - 2 * z3;
        const double r = 21.0 - static_cast<double>(a) * b;
        h(idx, idx) = r * r;
    }
    return h;
}

ComplexMatrix factor21_hamiltonian(const Factor21Params& p, double s) {
    validate(p);
    require_unit_interval(s, "factor21_hamiltonian");
    const ComplexMatrix h0 = factor21_h0(p);
    const ComplexMatrix hp = factor21_hp();
    ComplexMatrix h(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            h(i, j) = (1.0 - s) * h0(i, j) + s * hp(i, j);
    return h;
}

ModelSpec ModelSpec::make_lz(double omega0, double omega_x) {
    ModelSpec m;
    m.kind_ = Kind::LZ;
    m.lz_ = LZParams{omega0, omega_x};
    validate(m.lz_);
    return m;
}

ModelSpec ModelSpec::make_aqc1(double omega_x, double omega_z) {
    ModelSpec m;
    m.kind_ = Kind::Aqc1;
    m.aqc1_ = Aqc1Params{omega_x, omega_z};
    validate(m.aqc1_);
    return m;
}

ModelSpec ModelSpec::make_factor21(double g) {
    ModelSpec m;
    m.kind_ = Kind::Factor21;
    m.f21_ = Factor21Params{g};
    validate(m.f21_);
    m.h0_ = std::make_shared<ComplexMatrix>(factor21_h0(m.f21_));
    m.hp_ = std::make_shared<ComplexMatrix>(factor21_hp());
    return m;
}

std::string ModelSpec::id() const {
    switch (kind_) {
        case Kind::LZ: return "lz";
        case Kind::Aqc1: return "aqc1";
        case Kind::Factor21: return "factor21";
    }
    return "?";
}

const LZParams& ModelSpec::lz() const {
    if (kind_ != Kind::LZ) throw std::logic_error("ModelSpec: not an LZ model");
    return lz_;
}

const Aqc1Params& ModelSpec::aqc1() const {
    if (kind_ != Kind::Aqc1) throw std::logic_error("ModelSpec: not an AQC1 model");
    return aqc1_;
}

const Factor21Params& ModelSpec::factor21() const {
    if (kind_ != Kind::Factor21) throw std::logic_error("ModelSpec: not a factor21 model");
    return f21_;
}

ComplexMatrix ModelSpec::hamiltonian(double u) const {
    switch (kind_) {
        case Kind::LZ:
            return lz_hamiltonian(lz_, u);
        case Kind::Aqc1:
            return aqc1_hamiltonian(aqc1_, u);
        case Kind::Factor21: {
            require_unit_interval(u, "ModelSpec::hamiltonian");
            ComplexMatrix h(8);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    h(i, j) = (1.0 - u) * (*h0_)(i, j) + u * (*hp_)(i, j);
            return h;
        }
    }
    throw std::logic_error("ModelSpec: unknown kind");
}

ComplexMatrix ModelSpec::hamiltonian_at_s(double s) const {
    require_unit_interval(s, "ModelSpec::hamiltonian_at_s");
    if (kind_ == Kind::LZ) return lz_hamiltonian(lz_, -lz_.omega0 + 2.0 * lz_.omega0 * s);
    return hamiltonian(s);
}

}  // namespace adiasweep
