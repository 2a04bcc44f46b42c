#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhy::par {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Serial reference loop.
template <class F>
void for_each_serial(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

/// OpenMP work-shared loop; results must be written to disjoint slots so the
/// outcome is independent of scheduling. Falls back to the serial loop when
/// built without OpenMP.
template <class F>
void for_each_omp(std::size_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
#else
    for_each_serial(n, f);
#endif
}

enum class Mode { serial, openmp };

template <class F>
void for_each(Mode mode, std::size_t n, F&& f) {
    if (mode == Mode::openmp)
        for_each_omp(n, f);
    else
        for_each_serial(n, f);
}

}  // namespace qhy::par
