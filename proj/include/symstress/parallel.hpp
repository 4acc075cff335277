#pragma once

#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace symstress {

// Evaluates fn(0..n-1) on up to `jobs` threads. Results keep index order, and
// the first failing index (in order, not in time) rethrows.
template <class R, class Fn> std::vector<R> parallel_map(std::size_t n, int jobs, Fn fn) {
  std::vector<std::optional<R>> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i].emplace(fn(i));
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  std::size_t nthreads = jobs > 1 ? std::min<std::size_t>(static_cast<std::size_t>(jobs), n) : 1;
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<R> res;
  res.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (err[i]) std::rethrow_exception(err[i]);
    res.push_back(std::move(*out[i]));
  }
  return res;
}

}  // namespace symstress
