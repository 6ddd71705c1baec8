#pragma once

// Tiny execution-policy shim.  Every parallel loop in the library maps a
// pure function over an index range into a pre-sized buffer and then reduces
// serially in index order, so the serial and OpenMP paths are bitwise
// identical -- the test suite relies on that.

#include <cstddef>
#include <vector>

#ifdef HYPAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace hypab {

enum class Exec { serial, openmp };

template <typename F>
auto map_indexed(Exec exec, std::size_t n, F&& f)
    -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
#ifdef HYPAB_HAVE_OPENMP
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    return out;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

inline double wall_time() {
#ifdef HYPAB_HAVE_OPENMP
  return omp_get_wtime();
#else
  return 0.0;
#endif
}

}  // namespace hypab
