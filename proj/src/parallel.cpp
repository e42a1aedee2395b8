#include "raux/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace raux {

void set_thread_count(int n)
{
    if (n > 0) omp_set_num_threads(n);
}

int thread_count() { return omp_get_max_threads(); }

void configure_threads_from_env()
{
    if (const char* v = std::getenv("RAUX_THREADS")) {
        try {
            set_thread_count(std::stoi(v));
        } catch (const std::exception&) {
        }
    }
}

} // namespace raux
