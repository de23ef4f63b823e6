#pragma once

#include "wdist/cmatrix.hpp"
#include "wdist/states.hpp"
#include "wdist/weighted.hpp"

#include <json.hpp>
#include <vector>

namespace wdist {

inline constexpr double kBoundSlack = 1e-9;
inline constexpr double kDegenerateGap = 1e-10;

struct GateSpec {
    std::vector<int> targets;  // distinct qubit indices, first = most significant
    CMatrix hamiltonian;       // dim 2^targets.size(), Hermitian
    double duration = 0.0;     // > 0, hbar = 1
};

struct Circuit {
    int n = 0;
    std::vector<GateSpec> gates;  // applied first to last

    static Circuit from_json(const nlohmann::json& j);
};

void validate_circuit(const Circuit& c);

struct GateCost {
    int size = 0;          // qubit count k
    double energy = 0.0;   // seminorm of the gate Hamiltonian
    double duration = 0.0;
    double cost = 0.0;     // size * energy * duration
};

struct ResourceCost {
    double total = 0.0;
    std::vector<GateCost> per_gate;
};

ResourceCost resource_cost(const Circuit& c);

// Conjugates the state by each gate propagator in order.
DensityMatrix simulate_circuit(const Circuit& c, const DensityMatrix& rho0);

struct TauSplit {
    DensityMatrix tau;       // sigma's spectrum on rho's eigenbasis
    bool degenerate = false; // rho has an eigenvalue gap below kDegenerateGap
    double min_gap = 0.0;
};

// Eigenvalues of sigma (descending) placed on the eigenvectors of rho
// (ordered by descending eigenvalue).
TauSplit intermediate_tau_split(const DensityMatrix& rho, const DensityMatrix& sigma);
DensityMatrix intermediate_tau(const DensityMatrix& rho, const DensityMatrix& sigma);

struct BoundReport {
    double r_u = 0.0;          // total gate cost
    double d_b = 0.0;          // weighted Bures length input -> output
    double d_b_general = 0.0;  // weighted Bures length tau -> output
    DensityMatrix tau;
    bool tau_degenerate = false;
    double margin = 0.0;       // r_u - d_b
    bool holds = false;        // r_u >= d_b - kBoundSlack
    std::vector<GateCost> per_gate;
};

BoundReport audit_bound(const Circuit& c, const DensityMatrix& rho0, int workers = 0);

nlohmann::ordered_json to_json(const BoundReport& r);

} // namespace wdist
