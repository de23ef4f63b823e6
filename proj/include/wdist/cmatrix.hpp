#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wdist {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static CMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    cplx* row(std::size_t r) { return a_.data() + r * dim_; }
    const cplx* row(std::size_t r) const { return a_.data() + r * dim_; }

    CMatrix adjoint() const;
    cplx trace() const;

    bool all_finite() const;
    double max_abs() const;
    // max_{r,c} |a(r,c) - conj(a(c,r))|
    double hermiticity_residual() const;
    // a <- (a + a^dagger)/2
    void hermitize();

    bool operator==(const CMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Matrix product, skipping exact-zero left entries (the states handled here are
// often projectors or diagonal-plus-corner matrices, so most products are sparse
// in practice).  Row-parallel when OpenMP is enabled.
CMatrix matmul(const CMatrix& a, const CMatrix& b);
// Single-threaded reference kernel; produces bit-identical results to matmul.
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);

// Kronecker (tensor) product: entry ((i*db+k),(j*db+l)) = a(i,j)*b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// -i [h, m]
CMatrix commutator_rate(const CMatrix& h, const CMatrix& m);

} // namespace wdist
