#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include "riflab/common.hpp"

namespace riflab {

/// Evaluates f(i) for i in [0, n) into a vector. The parallel path writes
/// each slot independently, so the result never depends on the schedule.
/// If any call throws, the exception from the lowest index is rethrown.
template <class T, class F>
std::vector<T> map_indexed(std::size_t n, Exec exec, F&& f) {
  std::vector<T> out(n);
  const long long nn = static_cast<long long>(n);
  if (exec == Exec::parallel) {
    std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < nn; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errs[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  } else {
    for (long long i = 0; i < nn; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

/// Fixed-shape pairwise summation.
template <class T>
T pairwise_sum(const T* x, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = x[0];
    for (std::size_t i = 1; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

template <class T>
T pairwise_sum(const std::vector<T>& x) {
  return pairwise_sum(x.data(), x.size());
}

int thread_count();

}  // namespace riflab
