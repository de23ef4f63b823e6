#include "wdist/table1.hpp"

#include "wdist/distances.hpp"
#include "wdist/eig.hpp"
#include "wdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wdist {

namespace {

constexpr double kPi = std::numbers::pi;

StateSpec padded(StateFactor head, int n) {
    StateSpec s;
    const int used = head.qubits();
    s.factors.push_back(std::move(head));
    if (used < n) s.factors.push_back(basis_factor(std::string(n - used, '0')));
    return s;
}

StateSpec repeated(const StateFactor& block, int copies, int n) {
    StateSpec s;
    for (int i = 0; i < copies; ++i) s.factors.push_back(block);
    const int used = copies * block.qubits();
    if (used < n) s.factors.push_back(basis_factor(std::string(n - used, '0')));
    return s;
}

StateSpec zeros(int n) {
    StateSpec s;
    s.factors.push_back(basis_factor(std::string(n, '0')));
    return s;
}

} // namespace

std::pair<DensityMatrix, DensityMatrix> table1_states(const std::string& label, int n, int k, int l,
                                                      double a, double b) {
    const cplx ca(a, 0.0), cb(b, 0.0);
    const cplx ch(1.0 / std::sqrt(2.0), 0.0);
    if (label == "flip")
        return {build_state(zeros(n)), build_state(padded(basis_factor(std::string(k, '1')), n))};
    if (label == "ghz_k")
        return {build_state(zeros(n)), build_state(padded(ghz_factor(k, ca, cb), n))};
    if (label == "ghz_l_k")
        return {build_state(zeros(n)), build_state(repeated(ghz_factor(l, ca, cb), k, n))};
    if (label == "class_k")
        return {build_state(zeros(n)), build_state(padded(class_factor(k, ca, cb), n))};
    if (label == "class_l_k")
        return {build_state(zeros(n)), build_state(repeated(class_factor(l, ca, cb), k, n))};
    if (label == "dicke")
        return {build_state(zeros(n)), build_state(padded(dicke_factor(n, k), n))};
    if (label == "mixed_k")
        return {build_state(zeros(n)), build_state(padded(mixed_factor(k), n))};
    if (label == "ghz_vs_mixed")
        return {build_state(padded(ghz_factor(n, ca, cb), n)), build_state(padded(mixed_factor(n), n))};
    if (label == "class_vs_mixed")
        return {build_state(padded(class_factor(n, ca, cb), n)), build_state(padded(mixed_factor(n), n))};
    if (label == "ghz_vs_mixed_balanced")
        return {build_state(padded(ghz_factor(n, ch, ch), n)), build_state(padded(mixed_factor(n), n))};
    if (label == "class_vs_mixed_balanced")
        return {build_state(padded(class_factor(n, ch, ch), n)), build_state(padded(mixed_factor(n), n))};
    if (label == "class_vs_ghz")
        return {build_state(padded(class_factor(n, ca, cb), n)), build_state(padded(ghz_factor(n, ca, cb), n))};
    throw ParameterOutOfRangeError("unknown table row label: " + label);
}

namespace {

struct RowDef {
    std::string label;
    int k, l;
    double b_ref, db_ref;
};

// Best homogeneous single/pair partition value for a diag(|a|^2, |b|^2)-type
// state against the maximally mixed state; the crossover between the two
// regimes sits near |a|+|b| ~ 1.386.
double mixed_regime_max(int n, double s) {
    const double singles = n * std::acos(std::clamp(s / std::sqrt(2.0), 0.0, 1.0));
    if (n % 2 != 0) return singles;
    const double pairs = (n / 4.0) * std::acos(std::clamp(s / 2.0, 0.0, 1.0));
    return std::max(singles, pairs);
}

} // namespace

std::vector<Table1Row> table1_rows(int n, double a, double b, int workers,
                                   std::vector<BlockDistanceCache>* caches) {
    if (n < 2 || n > 10) throw ParameterOutOfRangeError("table rows need 2 <= n <= 10");
    if (a < 0.0 || b < 0.0 || std::abs(a * a + b * b - 1.0) > kHermitianTol)
        throw InvalidAmplitudesError("need a, b >= 0 with a^2 + b^2 = 1");

    const double acos_a = std::acos(a);
    const double s = a + b;
    const bool generic = std::abs(a - b) > kTableFlagTol; // |a| != 1/sqrt(2)

    std::vector<RowDef> defs;
    for (int k = 1; k <= n; ++k) defs.push_back({"flip", k, 0, kPi / 2.0, k * kPi / 2.0});
    for (int k = 1; k <= n; ++k) defs.push_back({"ghz_k", k, 0, acos_a, k * acos_a});
    for (int k = 2; k <= n; ++k)
        for (int l = 1; k * l <= n; ++l)
            defs.push_back({"ghz_l_k", k, l, std::acos(std::pow(a, k)), k * l * acos_a});
    for (int k = 1; k <= n; ++k) defs.push_back({"class_k", k, 0, acos_a, k * acos_a});
    for (int k = 2; k <= n; ++k)
        for (int l = 1; k * l <= n; ++l)
            defs.push_back({"class_l_k", k, l, std::acos(std::pow(a, k)), k * l * acos_a});
    for (int k = 1; k <= n - 1; ++k)
        defs.push_back({"dicke", k, 0, kPi / 2.0, n * std::acos(1.0 - double(k) / n)});
    for (int k = 1; k <= n; ++k)
        defs.push_back({"mixed_k", k, 0, std::acos(std::pow(2.0, -0.5 * k)),
                        k * std::acos(1.0 / std::sqrt(2.0))});
    if (generic) {
        const double b_ref = std::acos(s * std::pow(2.0, -0.5 * n));
        const double db_ref = n * std::acos(std::clamp(s / std::sqrt(2.0), 0.0, 1.0));
        defs.push_back({"ghz_vs_mixed", 0, 0, b_ref, db_ref});
        defs.push_back({"class_vs_mixed", 0, 0, b_ref, db_ref});
    }
    if (n % 2 == 0) {
        const double b_ref = std::acos(std::pow(2.0, -0.5 * (n - 1)));
        defs.push_back({"ghz_vs_mixed_balanced", 0, 0, b_ref, n * kPi / 16.0});
        defs.push_back({"class_vs_mixed_balanced", 0, 0, b_ref, n * kPi / 16.0});
    }
    defs.push_back({"class_vs_ghz", 0, 0, std::acos(std::sqrt(a * a * a * a + b * b * b * b)),
                    std::acos(std::sqrt(a * a * a * a + b * b * b * b)) / n});

    std::vector<Table1Row> rows;
    for (const RowDef& d : defs) {
        auto [rho, sigma] = table1_states(d.label, n, d.k, d.l, a, b);
        const BlockDistanceCache cache = subset_distance_cache(rho, sigma, workers);
        const WeightedResult wr = weighted_distance_from_cache(cache);
        const WeightedResult alt = weighted_distance_squared_convention(cache);

        Table1Row row;
        row.label = d.label;
        row.k = d.k;
        row.l = d.l;
        row.b_computed = cache.bures.back(); // full mask = global Bures length
        row.b_reference = d.b_ref;
        row.db_computed = wr.value;
        row.db_reference = d.db_ref;
        row.b_dev = std::abs(row.b_computed - row.b_reference);
        row.db_dev = std::abs(row.db_computed - row.db_reference);
        row.db_squared_convention = alt.value;
        row.flagged = row.b_dev > kTableFlagTol || row.db_dev > kTableFlagTol;
        rows.push_back(std::move(row));
        if (caches) caches->push_back(cache);
    }
    return rows;
}

} // namespace wdist
