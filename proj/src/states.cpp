#include "wdist/states.hpp"

#include "wdist/eig.hpp"
#include "wdist/errors.hpp"

#include <cmath>

namespace wdist {

DensityMatrix marginal(const DensityMatrix& rho, SubsetMask keep) {
    return DensityMatrix{mask_size(keep), partial_trace(rho.mat, keep)};
}

int StateFactor::qubits() const {
    switch (kind) {
        case Kind::Basis: return static_cast<int>(bits.size());
        case Kind::Ghz:
        case Kind::Class:
        case Kind::Mixed: return k;
        case Kind::Dicke: return n;
        case Kind::Raw: return qubit_count_for_dim(raw.dim());
    }
    return 0;
}

namespace {

void check_amplitudes(cplx a, cplx b) {
    const double norm = std::norm(a) + std::norm(b);
    if (std::abs(norm - 1.0) > kHermitianTol)
        throw InvalidAmplitudesError("|a|^2 + |b|^2 must be 1");
}

} // namespace

StateFactor basis_factor(std::string bits) {
    if (bits.empty()) throw ParseError("basis factor: empty bit string");
    for (char c : bits)
        if (c != '0' && c != '1') throw ParseError("basis factor: bits must be 0 or 1");
    StateFactor f;
    f.kind = StateFactor::Kind::Basis;
    f.bits = std::move(bits);
    return f;
}

StateFactor ghz_factor(int k, cplx a, cplx b) {
    if (k < 1) throw ParseError("ghz factor: k must be >= 1");
    check_amplitudes(a, b);
    StateFactor f;
    f.kind = StateFactor::Kind::Ghz;
    f.k = k;
    f.a = a;
    f.b = b;
    return f;
}

StateFactor class_factor(int k, cplx a, cplx b) {
    StateFactor f = ghz_factor(k, a, b);
    f.kind = StateFactor::Kind::Class;
    return f;
}

StateFactor dicke_factor(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw ParseError("dicke factor: need 0 <= k <= n");
    StateFactor f;
    f.kind = StateFactor::Kind::Dicke;
    f.n = n;
    f.k = k;
    return f;
}

StateFactor mixed_factor(int k) {
    if (k < 1) throw ParseError("mixed factor: k must be >= 1");
    StateFactor f;
    f.kind = StateFactor::Kind::Mixed;
    f.k = k;
    return f;
}

StateFactor raw_factor(CMatrix m) {
    if (!m.all_finite()) throw ParseError("raw factor: non-finite entries");
    const int n = qubit_count_for_dim(m.dim());
    const ValidationReport r = validate(DensityMatrix{n, m});
    if (!r.pass) throw ParseError("raw factor: matrix is not a density matrix");
    StateFactor f;
    f.kind = StateFactor::Kind::Raw;
    f.raw = std::move(m);
    return f;
}

int StateSpec::total_qubits() const {
    int n = 0;
    for (const StateFactor& f : factors) n += f.qubits();
    return n;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n - i) / (i + 1);
    return c;
}

namespace {

CMatrix projector(const std::vector<cplx>& v) {
    CMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

CMatrix factor_matrix(const StateFactor& f) {
    switch (f.kind) {
        case StateFactor::Kind::Basis: {
            const int nq = static_cast<int>(f.bits.size());
            std::size_t idx = 0;
            for (int i = 0; i < nq; ++i)
                if (f.bits[i] == '1') idx |= std::size_t{1} << (nq - 1 - i);
            CMatrix m(std::size_t{1} << nq);
            m(idx, idx) = cplx(1.0, 0.0);
            return m;
        }
        case StateFactor::Kind::Ghz: {
            std::vector<cplx> v(std::size_t{1} << f.k, cplx(0.0, 0.0));
            v.front() = f.a;
            v.back() = f.b;
            return projector(v);
        }
        case StateFactor::Kind::Class: {
            CMatrix m(std::size_t{1} << f.k);
            m(0, 0) = f.a * std::conj(f.a);
            m(m.dim() - 1, m.dim() - 1) = f.b * std::conj(f.b);
            return m;
        }
        case StateFactor::Kind::Dicke: {
            const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(f.n, f.k)));
            std::vector<cplx> v(std::size_t{1} << f.n, cplx(0.0, 0.0));
            for (std::size_t idx = 0; idx < v.size(); ++idx)
                if (std::popcount(idx) == f.k) v[idx] = cplx(amp, 0.0);
            return projector(v);
        }
        case StateFactor::Kind::Mixed: {
            const std::size_t d = std::size_t{1} << f.k;
            CMatrix m(d);
            const cplx p(1.0 / static_cast<double>(d), 0.0);
            for (std::size_t i = 0; i < d; ++i) m(i, i) = p;
            return m;
        }
        case StateFactor::Kind::Raw: return f.raw;
    }
    throw Error("unreachable factor kind");
}

} // namespace

DensityMatrix build_state(const StateSpec& spec, int max_qubits) {
    if (spec.factors.empty()) throw ParseError("state spec has no factors");
    const int n = spec.total_qubits();
    if (n > max_qubits) throw DimensionTooLargeError("state exceeds the qubit limit");
    CMatrix m = factor_matrix(spec.factors.front());
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
        m = kron(m, factor_matrix(spec.factors[i]));
    return DensityMatrix{n, std::move(m)};
}

ValidationReport validate(const DensityMatrix& rho) {
    ValidationReport r;
    r.hermiticity_residual = rho.mat.hermiticity_residual();
    r.trace_deviation = std::abs(rho.mat.trace() - cplx(1.0, 0.0));
    if (r.hermiticity_residual <= kHermitianTol) {
        EigDecomposition e = hermitian_eig(rho.mat);
        r.min_eigenvalue = e.eigenvalues.front();
    } else {
        // symmetrized spectrum still reported so the caller sees all failures
        CMatrix h = rho.mat;
        h.hermitize();
        r.min_eigenvalue = hermitian_eig(h).eigenvalues.front();
    }
    r.pass = r.hermiticity_residual <= kHermitianTol && r.trace_deviation <= kHermitianTol &&
             r.min_eigenvalue >= -kEigNegativeClamp;
    return r;
}

namespace {

cplx parse_complex(const nlohmann::json& j, const char* field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(std::string("expected [re, im] for ") + field);
    return cplx(j[0].get<double>(), j[1].get<double>());
}

CMatrix parse_matrix(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    const std::size_t d = j.size();
    CMatrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!j[r].is_array() || j[r].size() != d) throw ParseError("matrix rows must all have the same length");
        for (std::size_t c = 0; c < d; ++c) m(r, c) = parse_complex(j[r][c], "matrix entry");
    }
    return m;
}

} // namespace

StateSpec StateSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
        throw ParseError("state spec: expected {\"factors\": [...]}");
    StateSpec spec;
    for (const auto& fj : j["factors"]) {
        if (!fj.is_object() || !fj.contains("type")) throw ParseError("factor: missing type");
        const std::string type = fj["type"].get<std::string>();
        try {
            if (type == "basis") {
                spec.factors.push_back(basis_factor(fj.at("bits").get<std::string>()));
            } else if (type == "ghz") {
                spec.factors.push_back(ghz_factor(fj.at("k").get<int>(),
                                                  parse_complex(fj.at("a"), "a"),
                                                  parse_complex(fj.at("b"), "b")));
            } else if (type == "class") {
                spec.factors.push_back(class_factor(fj.at("k").get<int>(),
                                                    parse_complex(fj.at("a"), "a"),
                                                    parse_complex(fj.at("b"), "b")));
            } else if (type == "dicke") {
                spec.factors.push_back(dicke_factor(fj.at("n").get<int>(), fj.at("k").get<int>()));
            } else if (type == "mixed") {
                spec.factors.push_back(mixed_factor(fj.at("k").get<int>()));
            } else if (type == "raw") {
                spec.factors.push_back(raw_factor(parse_matrix(fj.at("mat"))));
            } else {
                throw ParseError("factor: unknown type '" + type + "'");
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("factor: ") + e.what());
        }
    }
    return spec;
}

} // namespace wdist
