#include "hurwitz/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hurwitz {

std::string to_string(ExecPolicy policy) { return policy == ExecPolicy::Serial ? "serial" : "parallel"; }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hurwitz
