#include "casimir/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace casimir {

std::size_t worker_count() {
  if (const char* env = std::getenv("CASIMIR_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_sharded(std::size_t shards, const std::function<void(std::size_t)>& body) {
  if (shards == 0) return;
  const std::size_t workers = std::min(worker_count(), shards);
  if (workers == 1) {
    for (std::size_t s = 0; s < shards; ++s) body(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t s = next++; s < shards; s = next++) {
        try {
          body(s);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace casimir
