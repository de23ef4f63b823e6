#include "wdist/distances.hpp"

#include "wdist/eig.hpp"
#include "wdist/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wdist {

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.mat.dim() != sigma.mat.dim())
        throw DimensionMismatchError("uhlmann_fidelity: states have different dimensions");
    double f = trace_norm(matmul(psd_sqrt(rho.mat), psd_sqrt(sigma.mat)));
    if (f > 1.0 - kUnityGuard) f = 1.0;
    return std::clamp(f, 0.0, 1.0);
}

BuresValue bures_length(const DensityMatrix& rho, const DensityMatrix& sigma) {
    BuresValue v;
    v.fidelity = uhlmann_fidelity(rho, sigma);
    v.length = std::acos(v.fidelity);
    return v;
}

double fisher_speed(const DensityMatrix& rho, const CMatrix& rho_dot) {
    if (rho_dot.dim() != rho.mat.dim())
        throw DimensionMismatchError("fisher_speed: derivative dimension mismatch");
    if (rho_dot.hermiticity_residual() > kHermitianTol)
        throw NotHermitianError("fisher_speed: derivative is not Hermitian");
    if (std::abs(rho_dot.trace()) > kHermitianTol)
        throw Error("fisher_speed: derivative is not traceless");

    const EigDecomposition e = hermitian_eig(rho.mat);
    const CMatrix w = matmul(matmul(e.eigenvectors.adjoint(), rho_dot), e.eigenvectors);
    const std::size_t d = w.dim();

    double total = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        const double lr = e.eigenvalues[r];
        const double dr = w(r, r).real();
        if (lr < kSpectralFloor) {
            if (dr * dr >= kNumeratorFloor)
                throw SingularDirectionError("fisher_speed: population change on a vanishing eigenvalue");
            continue;
        }
        total += dr * dr / (4.0 * lr);
    }
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = r + 1; s < d; ++s) {
            const double den = e.eigenvalues[r] + e.eigenvalues[s];
            const double num = std::norm(w(r, s));
            if (den < kSpectralFloor) {
                if (num >= kNumeratorFloor)
                    throw SingularDirectionError("fisher_speed: coherence on a vanishing subspace");
                continue;
            }
            total += num / den;
        }
    return std::sqrt(total);
}

double hamiltonian_variance(const CMatrix& h, const DensityMatrix& rho) {
    if (h.dim() != rho.mat.dim())
        throw DimensionMismatchError("hamiltonian_variance: dimension mismatch");
    if (h.hermiticity_residual() > kHermitianTol)
        throw NotHermitianError("hamiltonian_variance: h is not Hermitian");
    const CMatrix hr = matmul(h, rho.mat);
    const double mean = hr.trace().real();
    const double second = matmul(h, hr).trace().real();
    return std::max(second - mean * mean, 0.0);
}

double seminorm(const CMatrix& h) {
    if (h.hermiticity_residual() > kHermitianTol)
        throw NotHermitianError("seminorm: h is not Hermitian");
    const EigDecomposition e = hermitian_eig(h);
    return 0.5 * (e.eigenvalues.back() - e.eigenvalues.front());
}

} // namespace wdist
