#include "riflab/parallel.hpp"

#include <omp.h>

namespace riflab {

int thread_count() { return omp_get_max_threads(); }

}  // namespace riflab
