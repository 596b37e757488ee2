#include "fqsolve/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fqsolve {

bool use_openmp(Exec exec) {
#ifdef _OPENMP
  return exec == Exec::parallel && !omp_in_parallel() && omp_get_max_threads() > 1;
#else
  (void)exec;
  return false;
#endif
}

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace fqsolve
