#pragma once

#include "wdist/cmatrix.hpp"
#include "wdist/states.hpp"

namespace wdist {

// Guard for vanishing spectral denominators in the Fisher norm.
inline constexpr double kSpectralFloor = 1e-12;
inline constexpr double kNumeratorFloor = 1e-18;

// Fidelities within this distance of 1 are round-off from the spectral chain
// (arccos would blow the noise up to ~1e-7 lengths), so they are reported as
// exact overlap.  Finite-difference probes with dt = 1e-5 sit at 1-F ~ 5e-11,
// three decades above the guard.
inline constexpr double kUnityGuard = 1e-13;

struct BuresValue {
    double fidelity = 1.0;  // in [0, 1]
    double length = 0.0;    // arccos(fidelity), in [0, pi/2]
};

// Square-root fidelity ||sqrt(rho) sqrt(sigma)||_1, clamped to [0, 1].
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

BuresValue bures_length(const DensityMatrix& rho, const DensityMatrix& sigma);

// Metric speed of a state path: sqrt of
//   sum_r d_r^2 / (4 l_r) + sum_{r<s} |<r|rho_dot|s>|^2 / (l_r + l_s)
// with d_r = <r|rho_dot|r> in the eigenbasis of rho.  Terms whose denominator
// falls below kSpectralFloor are dropped when the numerator is negligible and
// raise SingularDirectionError otherwise.
double fisher_speed(const DensityMatrix& rho, const CMatrix& rho_dot);

// Tr{h^2 rho} - Tr{h rho}^2, clamped at zero.
double hamiltonian_variance(const CMatrix& h, const DensityMatrix& rho);

// Half the spectral spread (l_max - l_min) / 2.
double seminorm(const CMatrix& h);

} // namespace wdist
