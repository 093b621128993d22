#ifndef MARGINLAB_PARALLEL_HPP
#define MARGINLAB_PARALLEL_HPP

#include <cstddef>
#include <cstdint>

#ifdef MARGINLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace marginlab {

// Every parallel kernel also has a serial path; tests assert the two are
// bit-identical (all accumulation happens in index order after the fill).
enum class Execution { serial, parallel };

template <typename Fn>
void parallel_for(std::size_t count, Execution exec, Fn&& fn) {
#ifdef MARGINLAB_HAVE_OPENMP
    if (exec == Execution::parallel) {
        const std::int64_t m = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < m; ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

inline bool openmp_enabled() {
#ifdef MARGINLAB_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace marginlab

#endif
