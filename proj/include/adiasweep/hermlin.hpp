#ifndef ADIASWEEP_HERMLIN_HPP
#define ADIASWEEP_HERMLIN_HPP

#include <complex>
#include <vector>

namespace adiasweep {

using cplx = std::complex<double>;

// Hard cap on matrix dimension; everything here is dense and desk-scale.
inline constexpr int kMaxDim = 64;

class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

    double max_abs() const;
    bool is_hermitian(double tol = 1e-12) const;

private:
    int dim_;
    std::vector<cplx> a_;
};

struct StateVector {
    std::vector<cplx> amp;

    StateVector() = default;
    explicit StateVector(int dim) : amp(dim) {}

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const;
    void normalize();
};

// values ascending; column k of vectors is the eigenvector of values[k]
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};

// Cyclic Jacobi for complex Hermitian matrices. Sweeps until the
// off-diagonal Frobenius norm drops below 1e-13 * ||H||_F, capped at
// 100 sweeps. Eigenvector phases are fixed by making the largest-magnitude
// component real and positive (lowest index on ties).
EigenSystem eig_hermitian(const ComplexMatrix& H);

// U = V diag(exp(-i lambda_k dt)) V^dagger
ComplexMatrix unitary_step(const ComplexMatrix& H, double dt);

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B);

StateVector apply(const ComplexMatrix& U, const StateVector& psi);

ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B);
ComplexMatrix adjoint(const ComplexMatrix& A);

// psi <- V diag(exp(-i lambda_k dt)) V^dagger psi, without forming the matrix
void propagate_in_place(const EigenSystem& es, double dt, StateVector& psi);

// Inner product <a|b> with the bra conjugated.
cplx inner(const StateVector& a, const StateVector& b);

}  // namespace adiasweep

#endif
