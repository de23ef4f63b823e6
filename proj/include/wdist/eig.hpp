#pragma once

#include "wdist/cmatrix.hpp"

#include <vector>

namespace wdist {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kJacobiOffTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kEigNegativeClamp = 1e-10;
// Eigenvalues this far below the spectral radius are round-off; taking their
// square root would amplify ~1e-16 junk to ~1e-8, so sqrt paths zero them.
inline constexpr double kEigZeroFloorRel = 1e-12;

struct EigDecomposition {
    std::vector<double> eigenvalues; // ascending
    CMatrix eigenvectors;            // columns, unitary
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.  Fixed sweep order
// (p ascending, q ascending), rotations applied only where the off-diagonal
// entry exceeds kJacobiOffTol; at most kJacobiMaxSweeps sweeps.
// Throws NotHermitianError when max |m - m^dagger| > kHermitianTol.
EigDecomposition hermitian_eig(const CMatrix& m);

// Hermitian PSD square root.  Eigenvalues in [-kEigNegativeClamp, 0) are
// clamped to zero; anything more negative raises NotPSDError.
CMatrix psd_sqrt(const CMatrix& m);

// Sum of singular values.  Hermitian input: sum |eigenvalues|; otherwise the
// eigenvalues of sqrt(m^dagger m).
double trace_norm(const CMatrix& m);

// U = exp(-i h t) for Hermitian h.
CMatrix propagator(const CMatrix& h, double t);

} // namespace wdist
