#include "pluckerlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace pluckerlab {

int thread_budget() {
  int budget = 0;
  if (const char* env = std::getenv("PLUCKER_LAB_THREADS")) budget = std::atoi(env);
  if (budget <= 0) budget = static_cast<int>(std::thread::hardware_concurrency());
  return budget > 0 ? budget : 1;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        if (failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace pluckerlab
