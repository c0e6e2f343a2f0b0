#include "detrep/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace detrep::parallel {

namespace {

// -1: not overridden, fall through to the environment / OpenMP default.
std::atomic<long> g_max_threads{-1};

// 0 in the environment means sequential.
long env_threads() {
    const char* v = std::getenv("DETREP_THREADS");
    if (v == nullptr || *v == '\0') return -1;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 0) return -1;
    return n == 0 ? 1 : n;
}

}  // namespace

std::size_t max_threads() {
    long n = g_max_threads.load();
    if (n < 0) n = env_threads();
    if (n < 0) {
#ifdef _OPENMP
        n = omp_get_max_threads();
#else
        n = 1;
#endif
    }
    return n == 0 ? 1 : static_cast<std::size_t>(n);
}

void set_max_threads(std::size_t n) {
    g_max_threads.store(n == 0 ? -1 : static_cast<long>(n));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = max_threads();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(workers))
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(detrep_parallel_error)
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace detrep::parallel
