#ifndef NSERIES_SRC_PARALLEL_HPP
#define NSERIES_SRC_PARALLEL_HPP

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nseries::detail
{

// Below this many outer iterations the kernels stay serial.
inline constexpr std::size_t parallel_threshold = 32;

inline int max_threads()
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline int thread_index()
{
#if defined(_OPENMP)
    return omp_get_thread_num();
#else
    return 0;
#endif
}

} // namespace nseries::detail

#endif
