#include "walkwatch/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace walkwatch {

namespace {
std::atomic<int> g_thread_count{0};

int resolve_auto() {
  if (const char* env = std::getenv("WALKWATCH_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}
}  // namespace

int thread_count() {
  const int n = g_thread_count.load(std::memory_order_relaxed);
  return n > 0 ? n : resolve_auto();
}

void set_thread_count(int n) {
  g_thread_count.store(n < 0 ? 0 : n, std::memory_order_relaxed);
}

}  // namespace walkwatch
