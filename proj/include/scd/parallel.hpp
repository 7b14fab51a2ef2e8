#pragma once

#ifdef SCD_HAVE_OPENMP
#include <omp.h>
#endif

namespace scd {

/// Set the worker count used by parallel loops. Results never depend on it.
inline void set_num_threads(int n) {
#ifdef SCD_HAVE_OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int num_threads() {
#ifdef SCD_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace scd
