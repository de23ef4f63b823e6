#include "wdist/qubits.hpp"

#include "wdist/eig.hpp"
#include "wdist/errors.hpp"

#include <algorithm>

namespace wdist {

int qubit_count_for_dim(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim))
        throw DimensionMismatchError("matrix dimension is not a power of two");
    return std::countr_zero(dim);
}

std::vector<int> mask_qubits(SubsetMask m, int n) {
    std::vector<int> qs;
    for (int i = 0; i < n; ++i)
        if (m & (SubsetMask{1} << i)) qs.push_back(i);
    return qs;
}

namespace {

// Index with the bits of `value` scattered onto the given qubits.  Bit j of
// `value` (counted from the most significant of the k-bit word) lands on
// qubits[j]'s position in the full index.
std::vector<std::size_t> scatter_table(const std::vector<int>& qubits, int n) {
    const int k = static_cast<int>(qubits.size());
    std::vector<std::size_t> table(std::size_t{1} << k, 0);
    for (std::size_t value = 0; value < table.size(); ++value) {
        std::size_t idx = 0;
        for (int j = 0; j < k; ++j)
            if (value & (std::size_t{1} << (k - 1 - j)))
                idx |= std::size_t{1} << (n - 1 - qubits[j]);
        table[value] = idx;
    }
    return table;
}

} // namespace

CMatrix partial_trace(const CMatrix& rho, SubsetMask keep) {
    const int n = qubit_count_for_dim(rho.dim());
    if (keep == 0) throw EmptySubsetError("partial_trace: empty subset");
    if (keep >= (SubsetMask{1} << n))
        throw DimensionMismatchError("partial_trace: mask outside qubit range");

    std::vector<int> kept = mask_qubits(keep, n);
    std::vector<int> traced;
    for (int i = 0; i < n; ++i)
        if (!(keep & (SubsetMask{1} << i))) traced.push_back(i);

    const auto keep_idx = scatter_table(kept, n);
    const auto env_idx = scatter_table(traced, n);
    const std::size_t dk = keep_idx.size();

    CMatrix out(dk);
    for (std::size_t r = 0; r < dk; ++r)
        for (std::size_t c = 0; c < dk; ++c) {
            cplx s(0.0, 0.0);
            for (std::size_t e : env_idx) s += rho(keep_idx[r] | e, keep_idx[c] | e);
            out(r, c) = s;
        }
    return out;
}

CMatrix embed_operator(const CMatrix& g, const std::vector<int>& targets, int n) {
    const int k = static_cast<int>(targets.size());
    if (g.dim() != (std::size_t{1} << k))
        throw DimensionMismatchError("embed_operator: operator dimension does not match target count");
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
        if (sorted[i] < 0 || sorted[i] >= n)
            throw DimensionMismatchError("embed_operator: target outside qubit range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw DimensionMismatchError("embed_operator: duplicate target");
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (std::find(targets.begin(), targets.end(), i) == targets.end()) rest.push_back(i);

    const auto tgt_idx = scatter_table(targets, n);
    const auto env_idx = scatter_table(rest, n);
    const std::size_t dk = tgt_idx.size();

    CMatrix out(std::size_t{1} << n);
    for (std::size_t x = 0; x < dk; ++x)
        for (std::size_t y = 0; y < dk; ++y) {
            const cplx gxy = g(x, y);
            if (gxy.real() == 0.0 && gxy.imag() == 0.0) continue;
            for (std::size_t e : env_idx) out(tgt_idx[x] | e, tgt_idx[y] | e) = gxy;
        }
    return out;
}

CMatrix apply_kraus(const CMatrix& rho, const std::vector<CMatrix>& kraus, int target) {
    const int n = qubit_count_for_dim(rho.dim());
    if (target < 0 || target >= n)
        throw DimensionMismatchError("apply_kraus: target outside qubit range");
    CMatrix sum(2);
    for (const CMatrix& k : kraus) {
        if (k.dim() != 2) throw DimensionMismatchError("apply_kraus: Kraus operators must be 2x2");
        sum = sum + matmul(k.adjoint(), k);
    }
    if (max_abs_diff(sum, CMatrix::identity(2)) > kHermitianTol)
        throw NotTracePreservingError("apply_kraus: sum K^dagger K != I");

    CMatrix out(rho.dim());
    for (const CMatrix& k : kraus) {
        CMatrix e = embed_operator(k, {target}, n);
        out = out + matmul(matmul(e, rho), e.adjoint());
    }
    return out;
}

} // namespace wdist
