#include "brl/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace brl {

void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace brl
