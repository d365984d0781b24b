#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qq {

// QQ_ENGINE_THREADS caps parallelism; unset means hardware concurrency
inline int engineThreads() {
  if (const char* s = std::getenv("QQ_ENGINE_THREADS")) {
    try {
      int n = std::stoi(s);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// nested parallelMap calls run inline on the worker that reached them
inline bool& parallelInWorker() {
  static thread_local bool v = false;
  return v;
}

// results[i] = f(i); callers reduce in index order so output never depends on scheduling
template <class F>
auto parallelMap(size_t n, F f) -> std::vector<decltype(f(size_t{}))> {
  using R = decltype(f(size_t{}));
  std::vector<R> results(n);
  size_t nthreads = std::min<size_t>(static_cast<size_t>(engineThreads()), n);
  if (nthreads <= 1 || parallelInWorker()) {
    for (size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex errMu;
  auto work = [&]() {
    parallelInWorker() = true;
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(errMu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t k = 0; k < nthreads; ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return results;
}

}  // namespace qq
