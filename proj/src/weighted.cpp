#include "wdist/weighted.hpp"

#include "wdist/errors.hpp"
#include "wdist/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace wdist {

bool is_valid_partition(const Partition& p, int n) {
    SubsetMask seen = 0;
    for (SubsetMask b : p.blocks) {
        if (b == 0 || b >= (SubsetMask{1} << n)) return false;
        if (seen & b) return false;
        seen |= b;
    }
    return seen == (SubsetMask{1} << n) - 1;
}

namespace {

void check_pair(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.n != sigma.n || rho.mat.dim() != sigma.mat.dim())
        throw DimensionMismatchError("states have different qubit counts");
    if (rho.n > kDefaultMaxQubits)
        throw TooLargeError("qubit count exceeds the subset-cache limit");
}

void cache_entry(BlockDistanceCache& cache, const DensityMatrix& rho, const DensityMatrix& sigma,
                 SubsetMask mask) {
    const DensityMatrix ra = marginal(rho, mask);
    const DensityMatrix sa = marginal(sigma, mask);
    const BuresValue b = bures_length(ra, sa);
    cache.fidelity[mask] = b.fidelity;
    cache.bures[mask] = b.length;
}

} // namespace

BlockDistanceCache subset_distance_cache(const DensityMatrix& rho, const DensityMatrix& sigma,
                                         int workers) {
    check_pair(rho, sigma);
    const SubsetMask full = (SubsetMask{1} << rho.n) - 1;
    BlockDistanceCache cache;
    cache.n = rho.n;
    cache.bures.assign(full + 1, 0.0);
    cache.fidelity.assign(full + 1, 1.0);
    const int nt = resolve_workers(workers);
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
#endif
    for (long long mask = 1; mask <= static_cast<long long>(full); ++mask)
        cache_entry(cache, rho, sigma, static_cast<SubsetMask>(mask));
    return cache;
}

BlockDistanceCache subset_distance_cache_serial(const DensityMatrix& rho,
                                                const DensityMatrix& sigma) {
    check_pair(rho, sigma);
    const SubsetMask full = (SubsetMask{1} << rho.n) - 1;
    BlockDistanceCache cache;
    cache.n = rho.n;
    cache.bures.assign(full + 1, 0.0);
    cache.fidelity.assign(full + 1, 1.0);
    for (SubsetMask mask = 1; mask <= full; ++mask) cache_entry(cache, rho, sigma, mask);
    return cache;
}

double weighted_sum(const Partition& p, const BlockDistanceCache& cache) {
    if (!is_valid_partition(p, cache.n))
        throw InvalidPartitionError("blocks must be disjoint, nonempty, and cover all qubits");
    double s = 0.0;
    for (SubsetMask b : p.blocks) s += cache.bures[b] / mask_size(b);
    return s;
}

namespace {

struct DpEntry {
    double value = 0.0;
    int blocks = 0;
    SubsetMask choice = 0;
};

WeightedResult max_weighted_partition(const std::vector<double>& block_length, int n) {
    const SubsetMask full = (SubsetMask{1} << n) - 1;
    std::vector<DpEntry> f(full + 1);
    for (SubsetMask s = 1; s <= full; ++s) {
        const SubsetMask low = s & (~s + 1);
        const SubsetMask rest = s ^ low;
        DpEntry best;
        bool first = true;
        SubsetMask sub = rest;
        while (true) {
            const SubsetMask b = sub | low;
            const DpEntry& tail = f[s ^ b];
            const double v = block_length[b] / mask_size(b) + tail.value;
            const int cnt = 1 + tail.blocks;
            if (first || v > best.value ||
                (v == best.value && (cnt < best.blocks || (cnt == best.blocks && b < best.choice)))) {
                best = DpEntry{v, cnt, b};
                first = false;
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        f[s] = best;
    }

    WeightedResult r;
    r.value = f[full].value;
    for (SubsetMask s = full; s != 0; s ^= f[s].choice) r.argmax_partition.blocks.push_back(f[s].choice);
    std::sort(r.argmax_partition.blocks.begin(), r.argmax_partition.blocks.end());
    for (SubsetMask b : r.argmax_partition.blocks) {
        const int sz = mask_size(b);
        r.per_block.push_back(BlockContribution{b, sz, block_length[b], block_length[b] / sz});
    }
    return r;
}

} // namespace

WeightedResult weighted_distance(const DensityMatrix& rho, const DensityMatrix& sigma, int workers) {
    return weighted_distance_from_cache(subset_distance_cache(rho, sigma, workers));
}

WeightedResult weighted_distance_from_cache(const BlockDistanceCache& cache) {
    return max_weighted_partition(cache.bures, cache.n);
}

WeightedResult weighted_distance_squared_convention(const BlockDistanceCache& cache) {
    std::vector<double> lengths(cache.fidelity.size(), 0.0);
    for (std::size_t m = 1; m < lengths.size(); ++m) {
        const double f2 = std::clamp(cache.fidelity[m] * cache.fidelity[m], 0.0, 1.0);
        lengths[m] = std::acos(f2);
    }
    return max_weighted_partition(lengths, cache.n);
}

void enumerate_partitions(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 1) throw TooLargeError("enumerate_partitions: need n >= 1");
    if (n > kMaxEnumerationQubits) throw TooLargeError("enumerate_partitions: n exceeds the limit");

    std::vector<int> a(n, 0); // restricted growth string
    std::vector<int> m(n, 0); // m[i] = max(a[0..i])
    Partition p;
    while (true) {
        const int nblocks = m[n - 1] + 1;
        p.blocks.assign(nblocks, 0);
        for (int i = 0; i < n; ++i) p.blocks[a[i]] |= SubsetMask{1} << i;
        fn(p);

        int i = n - 1;
        while (i >= 1 && a[i] == m[i - 1] + 1) --i;
        if (i == 0) return;
        ++a[i];
        m[i] = std::max(m[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            m[j] = m[i];
        }
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

WeightedResult bruteforce_from_cache(const BlockDistanceCache& cache) {
    if (cache.n > kMaxBruteForceQubits)
        throw TooLargeError("weighted_distance_bruteforce: n exceeds the limit");
    WeightedResult r;
    bool first = true;
    enumerate_partitions(cache.n, [&](const Partition& p) {
        double v = 0.0;
        for (SubsetMask b : p.blocks) v += cache.bures[b] / mask_size(b);
        if (first || v > r.value) {
            r.value = v;
            r.argmax_partition = p;
            first = false;
        }
    });
    std::sort(r.argmax_partition.blocks.begin(), r.argmax_partition.blocks.end());
    for (SubsetMask b : r.argmax_partition.blocks) {
        const int sz = mask_size(b);
        r.per_block.push_back(BlockContribution{b, sz, cache.bures[b], cache.bures[b] / sz});
    }
    return r;
}

WeightedResult weighted_distance_bruteforce(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.n > kMaxBruteForceQubits)
        throw TooLargeError("weighted_distance_bruteforce: n exceeds the limit");
    return bruteforce_from_cache(subset_distance_cache(rho, sigma));
}

std::pair<double, double> sandwich_bounds(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const double b = bures_length(rho, sigma).length;
    return {b / rho.n, rho.n * b};
}

nlohmann::ordered_json to_json(const WeightedResult& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const BlockContribution& b : r.per_block) {
        j["blocks"].push_back({{"mask", b.mask},
                               {"size", b.size},
                               {"bures", b.length},
                               {"contribution", b.contribution}});
    }
    j["partition"] = nlohmann::ordered_json::array();
    for (SubsetMask b : r.argmax_partition.blocks) j["partition"].push_back(b);
    return j;
}

} // namespace wdist
