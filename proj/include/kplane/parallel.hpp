#pragma once

// Index-parallel loops with reductions in fixed index order. Results never
// depend on the number of worker threads.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace kplane::parallel {

void set_threads(unsigned count);
unsigned threads();

/// Runs fn(i) for i in [0, count) on up to threads() workers.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Pairwise summation tree keyed by index.
double pairwise_sum(std::span<const double> values);

template <class F>
double ordered_reduce(std::size_t count, F&& fn) {
  std::vector<double> parts(count);
  for_each_index(count, [&](std::size_t i) { parts[i] = fn(i); });
  return pairwise_sum(parts);
}

template <class F>
std::vector<double> map(std::size_t count, F&& fn) {
  std::vector<double> out(count);
  for_each_index(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace kplane::parallel
