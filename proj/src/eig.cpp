#include "wdist/eig.hpp"

#include "wdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wdist {

namespace {

void require_hermitian(const CMatrix& m, const char* who) {
    if (!m.all_finite()) throw Error(std::string(who) + ": non-finite entries");
    if (m.hermiticity_residual() > kHermitianTol)
        throw NotHermitianError(std::string(who) + ": matrix is not Hermitian");
}

// Apply the plane rotation J (J_pp = c, J_pq = -s*u, J_qp = s*conj(u), J_qq = c)
// as a <- J^dagger a J.
void rotate(CMatrix& a, std::size_t p, std::size_t q, double c, double s, cplx u) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) { // columns p, q of a*J
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(u) * aiq;
        a(i, q) = -s * u * aip + c * aiq;
    }
    for (std::size_t j = 0; j < n; ++j) { // rows p, q of J^dagger * (a J)
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj + s * u * aqj;
        a(q, j) = -s * std::conj(u) * apj + c * aqj;
    }
}

void rotate_columns(CMatrix& v, std::size_t p, std::size_t q, double c, double s, cplx u) {
    const std::size_t n = v.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip + s * std::conj(u) * viq;
        v(i, q) = -s * u * vip + c * viq;
    }
}

} // namespace

EigDecomposition hermitian_eig(const CMatrix& m) {
    require_hermitian(m, "hermitian_eig");
    const std::size_t n = m.dim();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= kJacobiOffTol) continue;
                ++rotations;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * r);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx u = apq / r;
                rotate(a, p, q, c, s, u);
                rotate_columns(v, p, q, c, s, u);
                a(p, q) = cplx(0.0, 0.0);
                a(q, p) = cplx(0.0, 0.0);
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
            }
        }
        if (rotations == 0) break;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const double lx = a(x, x).real(), ly = a(y, y).real();
        return lx != ly ? lx < ly : x < y;
    });

    EigDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
    }
    return out;
}

namespace {

// v * diag(d) * v^dagger
CMatrix from_spectrum(const CMatrix& v, const std::vector<cplx>& d) {
    const std::size_t n = v.dim();
    CMatrix w(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) w(r, c) = v(r, c) * d[c];
    return matmul(w, v.adjoint());
}

} // namespace

CMatrix psd_sqrt(const CMatrix& m) {
    EigDecomposition e = hermitian_eig(m);
    const double floor = kEigZeroFloorRel *
                         std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
    std::vector<cplx> d(e.eigenvalues.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        double l = e.eigenvalues[i];
        if (l < -kEigNegativeClamp) throw NotPSDError("psd_sqrt: negative eigenvalue");
        if (l < floor) l = 0.0;
        d[i] = cplx(std::sqrt(l), 0.0);
    }
    CMatrix r = from_spectrum(e.eigenvectors, d);
    r.hermitize();
    return r;
}

double trace_norm(const CMatrix& m) {
    if (!m.all_finite()) throw Error("trace_norm: non-finite entries");
    if (m.hermiticity_residual() <= kHermitianTol) {
        EigDecomposition e = hermitian_eig(m);
        double s = 0.0;
        for (double l : e.eigenvalues) s += std::abs(l);
        return s;
    }
    EigDecomposition e = hermitian_eig(matmul(m.adjoint(), m));
    const double floor = kEigZeroFloorRel *
                         std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
    double s = 0.0;
    for (double l : e.eigenvalues)
        if (l > floor) s += std::sqrt(l);
    return s;
}

CMatrix propagator(const CMatrix& h, double t) {
    EigDecomposition e = hermitian_eig(h);
    std::vector<cplx> d(e.eigenvalues.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = std::exp(cplx(0.0, -e.eigenvalues[i] * t));
    return from_spectrum(e.eigenvectors, d);
}

} // namespace wdist
