#include "adiasweep/hermlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace adiasweep {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("ComplexMatrix: dim must be in [1, " +
                                    std::to_string(kMaxDim) + "], got " + std::to_string(dim));
    a_.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& z : amp) s += std::norm(z);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double n = norm();
    if (n <= 0.0) throw std::runtime_error("StateVector: cannot normalize zero vector");
    for (auto& z : amp) z /= n;
}

namespace {

double frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& z : m.data()) s += std::norm(z);
    return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

// real symmetric specialization of the cyclic Jacobi loop below; all the
// model Hamiltonians are purely real, so this is the hot path
bool jacobi_real(const ComplexMatrix& H, std::vector<double>& a, std::vector<double>& v) {
    const int n = H.dim();
    for (const auto& z : H.data())
        if (z.imag() != 0.0) return false;

    a.resize(static_cast<size_t>(n) * n);
    v.assign(static_cast<size_t>(n) * n, 0.0);
    double frob = 0.0;
    for (int i = 0; i < n; ++i) {
        v[i * n + i] = 1.0;
        for (int j = 0; j < n; ++j) {
            a[i * n + j] = H(i, j).real();
            frob += a[i * n + j] * a[i * n + j];
        }
    }
    const double threshold = 1e-13 * std::sqrt(frob);

    const auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += a[i * n + j] * a[i * n + j];
        return std::sqrt(s);
    };

    bool converged = (n == 1) || off_norm() <= threshold;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                const double r = std::abs(apq);
                if (r <= threshold / (n * n) || r == 0.0) continue;
                const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * r);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                if (apq < 0.0) t = -t;  // phase = sign(apq)
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        converged = off_norm() <= threshold;
    }
    if (!converged)
        throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge for a " +
                                 std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return true;
}

EigenSystem sorted_real_system(const ComplexMatrix& H, const std::vector<double>& a,
                               const std::vector<double>& v) {
    const int n = H.dim();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
    EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        es.values[k] = a[src * n + src];
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(v[i * n + src]);
            if (m > best) { best = m; imax = i; }
        }
        const double sign = v[imax * n + src] < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) es.vectors(i, k) = sign * v[i * n + src];
    }
    return es;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& H) {
    const int n = H.dim();
    const double scale = std::max(1.0, H.max_abs());
    if (!H.is_hermitian(1e-12 * scale))
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian within tolerance");

    {
        static thread_local std::vector<double> ra, rv;
        if (jacobi_real(H, ra, rv)) return sorted_real_system(H, ra, rv);
    }

    ComplexMatrix a = H;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm_h = frobenius(H);
    const double threshold = 1e-13 * norm_h;
    const int max_sweeps = 100;

    bool converged = (off_diagonal_norm(a) <= threshold) || n == 1;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= threshold / (n * n) || r == 0.0) continue;
                const cplx phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                // smaller-magnitude root of t^2 + 2 tau t - 1 = 0, which
                // annihilates a(p,q)
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx jpq = s * phase;                // J(p,q)
                const cplx jqp = -s * std::conj(phase);    // J(q,p)

                // A <- J^H A J : column update then row update
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp + jqp * akq;
                    a(k, q) = jpq * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp + jqp * vkq;
                    v(k, q) = jpq * vkp + c * vkq;
                }
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged)
        throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge for a " +
                                 std::to_string(n) + "x" + std::to_string(n) + " matrix");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        es.values[k] = a(src, src).real();
        // phase convention: largest-magnitude component real positive
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(v(i, src));
            if (m > best) { best = m; imax = i; }
        }
        cplx ph{1.0, 0.0};
        if (best > 0.0) ph = std::conj(v(imax, src)) / best;
        for (int i = 0; i < n; ++i) es.vectors(i, k) = ph * v(i, src);
    }
    return es;
}

ComplexMatrix unitary_step(const ComplexMatrix& H, double dt) {
    if (!std::isfinite(dt)) throw std::invalid_argument("unitary_step: dt must be finite");
    const EigenSystem es = eig_hermitian(H);
    const int n = H.dim();
    ComplexMatrix u(n);
    std::vector<cplx> ph(n);
    for (int k = 0; k < n; ++k)
        ph[k] = std::exp(cplx{0.0, -es.values[k] * dt});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                s += es.vectors(i, k) * ph[k] * std::conj(es.vectors(j, k));
            u(i, j) = s;
        }
    return u;
}

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int na = A.dim(), nb = B.dim();
    if (na * nb > kMaxDim)
        throw std::invalid_argument("kron: result dimension " + std::to_string(na * nb) +
                                    " exceeds cap " + std::to_string(kMaxDim));
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = A(i, j) * B(k, l);
    return out;
}

StateVector apply(const ComplexMatrix& U, const StateVector& psi) {
    const int n = U.dim();
    if (psi.dim() != n)
        throw std::invalid_argument("apply: dimension mismatch (" + std::to_string(n) + " vs " +
                                    std::to_string(psi.dim()) + ")");
    StateVector out(n);
    for (int i = 0; i < n; ++i) {
        cplx s{0.0, 0.0};
        for (int j = 0; j < n; ++j) s += U(i, j) * psi.amp[j];
        out.amp[i] = s;
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B) {
    const int n = A.dim();
    if (B.dim() != n) throw std::invalid_argument("matmul: dimension mismatch");
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = A(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * B(k, j);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& A) {
    const int n = A.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = std::conj(A(j, i));
    return out;
}

void propagate_in_place(const EigenSystem& es, double dt, StateVector& psi) {
    const int n = es.vectors.dim();
    if (psi.dim() != n) throw std::invalid_argument("propagate_in_place: dimension mismatch");
    static thread_local std::vector<cplx> w;
    w.assign(n, cplx{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        cplx s{0.0, 0.0};
        for (int i = 0; i < n; ++i) s += std::conj(es.vectors(i, k)) * psi.amp[i];
        w[k] = s * std::exp(cplx{0.0, -es.values[k] * dt});
    }
    for (int i = 0; i < n; ++i) {
        cplx s{0.0, 0.0};
        for (int k = 0; k < n; ++k) s += es.vectors(i, k) * w[k];
        psi.amp[i] = s;
    }
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

}  // namespace adiasweep
