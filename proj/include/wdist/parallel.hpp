#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wdist {

// Worker count actually used for a request of `workers` threads (0 = library default).
inline int resolve_workers(int workers) {
#ifdef _OPENMP
    if (workers > 0) return workers;
    return omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

} // namespace wdist
