#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symmod {

// Execution mode for the data-parallel kernels.  Serial is the reference
// implementation; OpenMP must produce bit-identical results (disjoint writes,
// chunked reductions combined in a fixed order).
enum class Exec { Serial, OpenMP };

template <class F>
void par_for(std::size_t count, Exec ex, F&& fn) {
#ifdef _OPENMP
    if (ex == Exec::OpenMP) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)ex;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace symmod
