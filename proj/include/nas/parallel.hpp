#pragma once

// Include this instead of <omp.h>; compiles with or without OpenMP.

#if defined(_OPENMP)
#include <omp.h>
namespace nas {
constexpr bool have_omp = true;
}
#else
namespace nas {
constexpr bool have_omp = false;
}
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline void omp_set_num_threads(int) {}
#endif

namespace nas {

// Runtime switch for the parallel kernels. Tests flip this to compare
// against the serial reference paths.
bool& parallel_enabled();

} // namespace nas
