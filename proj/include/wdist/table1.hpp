#pragma once

#include "wdist/states.hpp"
#include "wdist/weighted.hpp"

#include <string>
#include <vector>

namespace wdist {

inline constexpr double kTableFlagTol = 1e-9;

/// One benchmark case: a named state pair, the computed distances, and the
/// closed-form reference values with their deviations.
struct Table1Row {
    std::string label;
    int k = 0;  // 0 when not applicable
    int l = 0;
    double b_computed = 0.0;
    double b_reference = 0.0;
    double db_computed = 0.0;
    double db_reference = 0.0;
    double b_dev = 0.0;
    double db_dev = 0.0;
    double db_squared_convention = 0.0;
    bool flagged = false;  // computed value deviates from the reference form
};

// State pair for a given row template.  Labels:
//   flip        |0...0> vs |1>^k |0>^(n-k)
//   ghz_k       |0...0> vs ghz_k (x) |0>^(n-k)
//   ghz_l_k     |0...0> vs ghz_l^(x k) (x) |0>^(n-kl)
//   class_k     |0...0> vs class_k (x) |0>^(n-k)
//   class_l_k   |0...0> vs class_l^(x k) (x) |0>^(n-kl)
//   dicke       |0...0> vs dicke(n, k)
//   mixed_k     |0...0> vs I/2^k (x) |0>^(n-k)
//   ghz_vs_mixed, class_vs_mixed            ghz_n/class_n vs I/2^n
//   ghz_vs_mixed_balanced, class_vs_mixed_balanced   same at a=b=1/sqrt(2)
//   class_vs_ghz  class_n vs ghz_n
std::pair<DensityMatrix, DensityMatrix> table1_states(const std::string& label, int n, int k, int l,
                                                      double a, double b);

// All rows instantiable at this n (2..10) with real amplitudes a, b >= 0,
// a^2 + b^2 = 1.  When `caches` is non-null the per-row block caches are
// appended in row order.
std::vector<Table1Row> table1_rows(int n, double a, double b, int workers = 0,
                                   std::vector<BlockDistanceCache>* caches = nullptr);

} // namespace wdist
