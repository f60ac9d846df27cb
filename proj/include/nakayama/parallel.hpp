#pragma once

// Minimal worker pool over an index range.  Workers inherit the caller's
// ModP modulus; results go into caller-owned slots, so output order does not
// depend on scheduling.

#include "nakayama/field.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nakayama {

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto modulus = ModP::modulus();
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      ModulusGuard guard(modulus);
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  // lowest failing index wins, independent of scheduling
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace nakayama
