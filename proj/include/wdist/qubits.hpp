#pragma once

#include "wdist/cmatrix.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace wdist {

// Particle subset as a bitmask: bit i set <=> qubit i is in the subset.
// Qubit indices are zero based; qubit 0 is the most significant bit of a
// basis index, so a basis ket |b0 b1 ... b_{n-1}> has index sum_i b_i 2^{n-1-i}.
using SubsetMask = std::uint32_t;

inline int mask_size(SubsetMask m) { return std::popcount(m); }

// Qubit count for a 2^n matrix dimension; throws on non-powers of two.
int qubit_count_for_dim(std::size_t dim);

// Ascending qubit indices contained in the mask.
std::vector<int> mask_qubits(SubsetMask m, int n);

// Reduced state on the kept qubits, ordered by ascending original index.
CMatrix partial_trace(const CMatrix& rho, SubsetMask keep);

// Full 2^n operator acting as `g` on `targets` (first target = most
// significant bit of g's index) and as the identity elsewhere.
CMatrix embed_operator(const CMatrix& g, const std::vector<int>& targets, int n);

// sum_K (I (x) K (x) I) rho (I (x) K (x) I)^dagger with 2x2 Kraus operators
// acting on `target`.  Requires sum K^dagger K = I.
CMatrix apply_kraus(const CMatrix& rho, const std::vector<CMatrix>& kraus, int target);

} // namespace wdist
