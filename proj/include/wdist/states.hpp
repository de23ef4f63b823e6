#pragma once

#include "wdist/cmatrix.hpp"
#include "wdist/qubits.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace wdist {

inline constexpr int kDefaultMaxQubits = 12;

struct DensityMatrix {
    int n = 0;      // qubit count
    CMatrix mat;    // dim 2^n
};

DensityMatrix marginal(const DensityMatrix& rho, SubsetMask keep);

/// One tensor factor of a state specification.
struct StateFactor {
    enum class Kind { Basis, Ghz, Class, Dicke, Mixed, Raw };
    Kind kind;
    std::string bits;  // Basis
    int k = 0;         // Ghz/Class/Mixed block size, Dicke excitation count
    int n = 0;         // Dicke qubit count
    cplx a, b;         // Ghz/Class amplitudes, |a|^2 + |b|^2 = 1
    CMatrix raw;       // Raw

    int qubits() const;
};

StateFactor basis_factor(std::string bits);
StateFactor ghz_factor(int k, cplx a, cplx b);
StateFactor class_factor(int k, cplx a, cplx b);
StateFactor dicke_factor(int n, int k);
StateFactor mixed_factor(int k);
StateFactor raw_factor(CMatrix m);

struct StateSpec {
    std::vector<StateFactor> factors;

    int total_qubits() const;
    static StateSpec from_json(const nlohmann::json& j);
};

// Tensor product of the factors in listed order (first factor = most
// significant qubits).  Deterministic and bit-exact for a fixed spec.
DensityMatrix build_state(const StateSpec& spec, int max_qubits = kDefaultMaxQubits);

struct ValidationReport {
    double hermiticity_residual = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

ValidationReport validate(const DensityMatrix& rho);

std::uint64_t binomial(int n, int k);

} // namespace wdist
