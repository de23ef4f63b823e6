#include "wdist/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace wdist {

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

cplx CMatrix::trace() const {
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool CMatrix::all_finite() const {
    for (const cplx& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::hermiticity_residual() const {
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

void CMatrix::hermitize() {
    for (std::size_t r = 0; r < dim_; ++r) {
        (*this)(r, r) = cplx((*this)(r, r).real(), 0.0);
        for (std::size_t c = r + 1; c < dim_; ++c) {
            cplx v = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
            (*this)(r, c) = v;
            (*this)(c, r) = std::conj(v);
        }
    }
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a(r, c) + b(r, c);
    return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a(r, c) - b(r, c);
    return m;
}

CMatrix operator*(cplx s, const CMatrix& a) {
    CMatrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = s * a(r, c);
    return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

namespace {

// c rows [r0,r1) of a*b, ikj order with zero-skip on a(i,k).
void matmul_rows(CMatrix& c, const CMatrix& a, const CMatrix& b, std::size_t r0, std::size_t r1) {
    const std::size_t n = a.dim();
    for (std::size_t i = r0; i < r1; ++i) {
        cplx* crow = c.row(i);
        const cplx* arow = a.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = arow[k];
            if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
            const cplx* brow = b.row(k);
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

} // namespace

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.dim();
    CMatrix c(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        matmul_rows(c, a, b, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
#else
    matmul_rows(c, a, b, 0, n);
#endif
    return c;
}

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.dim());
    matmul_rows(c, a, b, 0, a.dim());
    return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    CMatrix m(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            if (aij.real() == 0.0 && aij.imag() == 0.0) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) m(i * db + k, j * db + l) = aij * b(k, l);
        }
    return m;
}

CMatrix commutator_rate(const CMatrix& h, const CMatrix& m) {
    CMatrix c = matmul(h, m) - matmul(m, h);
    return cplx(0.0, -1.0) * c;
}

} // namespace wdist
