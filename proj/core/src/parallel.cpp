#include "rpq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace rpq {
namespace {

unsigned initial_threads() noexcept {
  if (const char* env = std::getenv("RPQ_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& thread_setting() noexcept {
  static std::atomic<unsigned> value{initial_threads()};
  return value;
}

}  // namespace

unsigned kernel_threads() noexcept { return thread_setting().load(std::memory_order_relaxed); }

void set_kernel_threads(unsigned n) noexcept {
  thread_setting().store(std::max(1u, n), std::memory_order_relaxed);
}

void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  body(0, std::min(count, step), 0);
}

}  // namespace rpq
