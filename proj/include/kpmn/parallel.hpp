#ifndef KPMN_PARALLEL_HPP
#define KPMN_PARALLEL_HPP

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kpmn {

// Execution policy for the batch kernels.  Every kernel has a serial
// reference path; the OpenMP path must produce bit-identical results, which
// holds because each iteration writes only its own output slot and
// reductions are performed serially afterwards.
enum class Execution { serial, parallel };

#ifdef _OPENMP
inline bool openmp_enabled() { return true; }
inline int hardware_threads() { return omp_get_max_threads(); }
#else
inline bool openmp_enabled() { return false; }
inline int hardware_threads() { return 1; }
#endif

// Runs f(i) for i in [0, count).  Exceptions thrown by f are captured and
// rethrown on the calling thread (the first one wins); remaining iterations
// of the parallel loop become no-ops.
template <typename F>
void parallel_for(std::size_t count, F&& f, Execution exec = Execution::parallel) {
#ifdef _OPENMP
    if (exec == Execution::parallel && count > 1) {
        std::exception_ptr err = nullptr;
        bool failed = false;
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            bool skip;
#pragma omp atomic read
            skip = failed;
            if (skip) continue;
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(kpmn_parallel_for_err)
                {
                    if (!failed) {
                        err = std::current_exception();
#pragma omp atomic write
                        failed = true;
                    }
                }
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) f(i);
}

} // namespace kpmn

#endif
