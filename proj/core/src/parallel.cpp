#include "nearfield/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace nearfield {

namespace {

int initial_thread_count() {
  if (const char* env = std::getenv("REFLECTOR_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw > 16 ? 16 : hw);
}

std::atomic<int> g_threads{0};

}  // namespace

int thread_count() {
  int n = g_threads.load(std::memory_order_relaxed);
  if (n == 0) {
    n = initial_thread_count();
    g_threads.store(n, std::memory_order_relaxed);
  }
  return n;
}

void set_thread_count(int n) {
  if (n < 1) throw std::invalid_argument("thread count must be >= 1");
  g_threads.store(n, std::memory_order_relaxed);
}

void parallel_blocks(std::size_t n, std::size_t block,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t nblocks = (n + block - 1) / block;
  const int workers = thread_count();
  if (workers <= 1 || nblocks <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) {
      fn(b, b * block, std::min(n, (b + 1) * block));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) return;
      fn(b, b * block, std::min(n, (b + 1) * block));
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<std::size_t>(workers, nblocks));
  pool.reserve(spawn - 1);
  for (int i = 1; i < spawn; ++i) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = values[0];
    for (std::size_t i = 1; i < n; ++i) s += values[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace nearfield
