#include "wdist/resource.hpp"

#include "wdist/distances.hpp"
#include "wdist/eig.hpp"
#include "wdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wdist {

void validate_circuit(const Circuit& c) {
    if (c.n < 1 || c.n > kDefaultMaxQubits)
        throw InvalidGateError("circuit qubit count out of range");
    for (const GateSpec& g : c.gates) {
        if (g.targets.empty() || g.targets.size() > static_cast<std::size_t>(c.n))
            throw InvalidGateError("gate target list size out of range");
        std::vector<int> sorted = g.targets;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= c.n) throw InvalidGateError("gate target out of range");
            if (i > 0 && sorted[i] == sorted[i - 1]) throw InvalidGateError("duplicate gate target");
        }
        if (g.hamiltonian.dim() != (std::size_t{1} << g.targets.size()))
            throw InvalidGateError("gate Hamiltonian dimension does not match target count");
        if (g.hamiltonian.hermiticity_residual() > kHermitianTol)
            throw InvalidGateError("gate Hamiltonian is not Hermitian");
        if (!(g.duration > 0.0)) throw InvalidGateError("gate duration must be positive");
    }
}

ResourceCost resource_cost(const Circuit& c) {
    validate_circuit(c);
    ResourceCost rc;
    for (const GateSpec& g : c.gates) {
        GateCost gc;
        gc.size = static_cast<int>(g.targets.size());
        gc.energy = seminorm(g.hamiltonian);
        gc.duration = g.duration;
        gc.cost = gc.size * gc.energy * gc.duration;
        rc.per_gate.push_back(gc);
        rc.total += gc.cost;
    }
    return rc;
}

DensityMatrix simulate_circuit(const Circuit& c, const DensityMatrix& rho0) {
    validate_circuit(c);
    if (rho0.n != c.n) throw DimensionMismatchError("simulate_circuit: state/circuit qubit mismatch");
    DensityMatrix rho = rho0;
    for (const GateSpec& g : c.gates) {
        const CMatrix u = embed_operator(propagator(g.hamiltonian, g.duration), g.targets, c.n);
        rho.mat = matmul(matmul(u, rho.mat), u.adjoint());
        rho.mat.hermitize();
    }
    return rho;
}

TauSplit intermediate_tau_split(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.n != sigma.n)
        throw DimensionMismatchError("intermediate_tau: states have different qubit counts");
    const EigDecomposition er = hermitian_eig(rho.mat);
    const EigDecomposition es = hermitian_eig(sigma.mat);
    const std::size_t d = rho.mat.dim();

    TauSplit split;
    split.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < d; ++i)
        split.min_gap = std::min(split.min_gap, er.eigenvalues[i + 1] - er.eigenvalues[i]);
    split.degenerate = d > 1 && split.min_gap < kDegenerateGap;

    // er/es are ascending; pair from the top of both spectra.
    CMatrix w(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            w(r, c) = er.eigenvectors(r, d - 1 - c) * es.eigenvalues[d - 1 - c];
    CMatrix tau(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            cplx s(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k)
                s += w(r, k) * std::conj(er.eigenvectors(c, d - 1 - k));
            tau(r, c) = s;
        }
    tau.hermitize();
    split.tau = DensityMatrix{rho.n, std::move(tau)};
    return split;
}

DensityMatrix intermediate_tau(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return intermediate_tau_split(rho, sigma).tau;
}

BoundReport audit_bound(const Circuit& c, const DensityMatrix& rho0, int workers) {
    const DensityMatrix sigma = simulate_circuit(c, rho0);
    const ResourceCost rc = resource_cost(c);
    TauSplit split = intermediate_tau_split(rho0, sigma);

    BoundReport r;
    r.r_u = rc.total;
    r.per_gate = rc.per_gate;
    r.d_b = weighted_distance(rho0, sigma, workers).value;
    r.d_b_general = weighted_distance(split.tau, sigma, workers).value;
    r.tau = std::move(split.tau);
    r.tau_degenerate = split.degenerate;
    r.margin = r.r_u - r.d_b;
    r.holds = r.margin >= -kBoundSlack;
    return r;
}

namespace {

cplx json_complex(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

} // namespace

Circuit Circuit::from_json(const nlohmann::json& j) {
    Circuit c;
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("gates"))
            throw ParseError("circuit: expected {\"n\": ..., \"gates\": [...]}");
        c.n = j["n"].get<int>();
        for (const auto& gj : j["gates"]) {
            GateSpec g;
            for (const auto& t : gj.at("targets")) g.targets.push_back(t.get<int>());
            const auto& hj = gj.at("h");
            if (!hj.is_array() || hj.empty()) throw ParseError("circuit: gate h must be a matrix");
            g.hamiltonian = CMatrix(hj.size());
            for (std::size_t r = 0; r < hj.size(); ++r) {
                if (!hj[r].is_array() || hj[r].size() != hj.size())
                    throw ParseError("circuit: gate h must be square");
                for (std::size_t col = 0; col < hj.size(); ++col)
                    g.hamiltonian(r, col) = json_complex(hj[r][col]);
            }
            g.duration = gj.at("t").get<double>();
            c.gates.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("circuit: ") + e.what());
    }
    validate_circuit(c);
    return c;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["r_u"] = r.r_u;
    j["d_b"] = r.d_b;
    j["d_b_general"] = r.d_b_general;
    j["margin"] = r.margin;
    j["holds"] = r.holds;
    j["tau_degenerate"] = r.tau_degenerate;
    j["per_gate"] = nlohmann::ordered_json::array();
    for (const GateCost& g : r.per_gate)
        j["per_gate"].push_back(
            {{"k", g.size}, {"e", g.energy}, {"t", g.duration}, {"r", g.cost}});
    j["tau"] = nlohmann::ordered_json::array();
    for (std::size_t row = 0; row < r.tau.mat.dim(); ++row) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (std::size_t col = 0; col < r.tau.mat.dim(); ++col) {
            const cplx v = r.tau.mat(row, col);
            jrow.push_back({v.real(), v.imag()});
        }
        j["tau"].push_back(jrow);
    }
    return j;
}

} // namespace wdist
