// Batch kernels run either serially (the reference path, kept for testing)
// or under OpenMP.  Results are collected per index and reduced in index
// order, so both paths produce identical output.
#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace cmeis {

enum class exec { serial, parallel };

// out[i] = fn(i) for i in [0, count).  Work items must be independent.
template <typename T, typename Fn>
std::vector<T> batch_map(exec policy, std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  if (policy == exec::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace cmeis
