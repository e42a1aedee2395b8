#pragma once

#include <cstddef>

namespace raux {

// Scans and box searches come in two flavours: a plain loop kept as the
// reference, and an OpenMP loop. Results are written by index so both give
// identical output.
enum class Exec { serial, parallel };

// Thread count for parallel loops; 0 leaves the OpenMP default.
void set_thread_count(int n);
int thread_count();
// Reads RAUX_THREADS if set.
void configure_threads_from_env();

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f)
{
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

} // namespace raux
