#pragma once

#include "wdist/distances.hpp"
#include "wdist/qubits.hpp"
#include "wdist/states.hpp"

#include <functional>
#include <json.hpp>
#include <utility>
#include <vector>

namespace wdist {

inline constexpr int kMaxEnumerationQubits = 10;
inline constexpr int kMaxBruteForceQubits = 8;

/// Disjoint subset blocks covering all n qubits.
struct Partition {
    std::vector<SubsetMask> blocks;
};

bool is_valid_partition(const Partition& p, int n);

/// Bures length (and fidelity) of the marginal pair for every nonempty subset.
struct BlockDistanceCache {
    int n = 0;
    std::vector<double> bures;     // indexed by mask; entry 0 unused
    std::vector<double> fidelity;  // same indexing

    double length_at(SubsetMask m) const { return bures[m]; }
};

// Entries are independent across masks and merged by mask index, so results do
// not depend on the worker count.
BlockDistanceCache subset_distance_cache(const DensityMatrix& rho, const DensityMatrix& sigma,
                                         int workers = 0);
// Reference implementation; bit-identical to the parallel cache.
BlockDistanceCache subset_distance_cache_serial(const DensityMatrix& rho, const DensityMatrix& sigma);

// sum over blocks of cache[B] / |B|.
double weighted_sum(const Partition& p, const BlockDistanceCache& cache);

struct BlockContribution {
    SubsetMask mask = 0;
    int size = 0;
    double length = 0.0;        // block distance entering the sum
    double contribution = 0.0;  // length / size
};

struct WeightedResult {
    double value = 0.0;
    Partition argmax_partition;
    std::vector<BlockContribution> per_block;
};

// Exact maximum of the inverse-size weighted sum over all set partitions,
// via dynamic programming on subset masks (each state extends by the block
// containing its lowest qubit; O(3^n) block visits).  Ties break toward fewer
// blocks, then the smallest block mask.
WeightedResult weighted_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 int workers = 0);
WeightedResult weighted_distance_from_cache(const BlockDistanceCache& cache);

// Same maximization with block lengths arccos(F^2) instead of arccos(F);
// reported alongside the primary value where the two fidelity conventions
// disagree.
WeightedResult weighted_distance_squared_convention(const BlockDistanceCache& cache);

// Every set partition of {0..n-1} exactly once, in lexicographic
// restricted-growth-string order.  The number of calls is the Bell number.
void enumerate_partitions(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> all_partitions(int n);

// Direct maximization over the enumerated partitions; the independent check
// for the subset DP.
WeightedResult weighted_distance_bruteforce(const DensityMatrix& rho, const DensityMatrix& sigma);
WeightedResult bruteforce_from_cache(const BlockDistanceCache& cache);

// (B/n, n*B) from the global Bures length.
std::pair<double, double> sandwich_bounds(const DensityMatrix& rho, const DensityMatrix& sigma);

nlohmann::ordered_json to_json(const WeightedResult& r);

} // namespace wdist
